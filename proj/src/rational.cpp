#include "polyenum/rational.hpp"

namespace polyenum {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string to_string(const QVec& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += p[i].str();
    }
    return out;
}

std::uint64_t hash_rational(const Rational& r) {
    constexpr unsigned long kPrime = 0xffffffffffc5ul;  // large 48-bit prime
    std::uint64_t hn = mpz_fdiv_ui(r.num().get_mpz_t(), kPrime);
    std::uint64_t hd = mpz_fdiv_ui(r.den().get_mpz_t(), kPrime);
    std::uint64_t h = hn * 0x9e3779b97f4a7c15ull;
    h ^= hd + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    if (r.sgn() < 0) h = ~h;
    return h;
}

std::uint64_t hash_qvec(const QVec& p) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (const auto& c : p) h = h * 0x100000001b3ull ^ hash_rational(c);
    return h;
}

BigInt det_int(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return BigInt(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

int rank_rat(std::vector<std::vector<Rational>> m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

void make_primitive(std::vector<BigInt>& v) {
    BigInt g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
}

}  // namespace polyenum
