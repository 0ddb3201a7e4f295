#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyenum {

using BigInt = mpz_class;

/// Exact rational number. Always canonical: lowest terms, denominator > 0.
/// All arithmetic is exact; there is no rounding anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sgn() const { return ::sgn(v_); }
    bool is_zero() const { return ::sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class v_;
};

using QVec = std::vector<Rational>;  // point in Q^d, d <= 4 in this library

std::string to_string(const QVec& p);

/// Hash suitable for dedup tables; not stable across processes by design
/// (keys that must be stable use their own serialization).
std::uint64_t hash_rational(const Rational& r);
std::uint64_t hash_qvec(const QVec& p);

/// Determinant of a small dense integer matrix (Bareiss, fraction-free).
BigInt det_int(std::vector<std::vector<BigInt>> m);

/// Rank of a small dense rational matrix via Gaussian elimination.
int rank_rat(std::vector<std::vector<Rational>> m);

/// Divides a vector of integers by its content (gcd) and flips signs so the
/// first nonzero entry is positive. Zero vectors are left untouched.
void make_primitive(std::vector<BigInt>& v);

}  // namespace polyenum
