#pragma once

// Test-only brute-force facet oracle, independent of the hull implementation:
// every hyperplane through four affinely independent input points that has
// all points weakly on one side, with its incident point set.

#include "polyenum/rational.hpp"
#include "polyenum/facet_complex.hpp"

#include <map>
#include <vector>

namespace polyenum::testing {

inline std::vector<std::pair<std::vector<BigInt>, VertexSet>> brute_facets(
    const std::vector<QVec>& pts) {
    const int m = static_cast<int>(pts.size());
    std::map<std::vector<BigInt>, VertexSet> found;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int e = c + 1; e < m; ++e) {
                    std::vector<std::vector<Rational>> rows;
                    for (int i : {a, b, c, e}) {
                        std::vector<Rational> r{Rational(1)};
                        for (const auto& x : pts[i]) r.push_back(x);
                        rows.push_back(std::move(r));
                    }
                    std::vector<Rational> h(5);
                    bool nonzero = false;
                    for (int skip = 0; skip < 5; ++skip) {
                        std::vector<std::vector<Rational>> minor;
                        for (auto& r : rows) {
                            std::vector<Rational> mr;
                            for (int cc = 0; cc < 5; ++cc)
                                if (cc != skip) mr.push_back(r[cc]);
                            minor.push_back(std::move(mr));
                        }
                        Rational det(1);
                        bool zero = false;
                        for (int kk = 0; kk < 4 && !zero; ++kk) {
                            int piv = -1;
                            for (int rr = kk; rr < 4; ++rr)
                                if (!minor[rr][kk].is_zero()) {
                                    piv = rr;
                                    break;
                                }
                            if (piv < 0) {
                                zero = true;
                                break;
                            }
                            if (piv != kk) {
                                std::swap(minor[piv], minor[kk]);
                                det = -det;
                            }
                            det *= minor[kk][kk];
                            for (int rr = kk + 1; rr < 4; ++rr) {
                                if (minor[rr][kk].is_zero()) continue;
                                Rational fct = minor[rr][kk] / minor[kk][kk];
                                for (int cc = kk; cc < 4; ++cc) minor[rr][cc] -= fct * minor[kk][cc];
                            }
                        }
                        h[skip] = zero ? Rational(0) : (skip % 2 ? -det : det);
                        nonzero |= !h[skip].is_zero();
                    }
                    if (!nonzero) continue;
                    BigInt lcm(1);
                    for (const auto& x : h)
                        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
                    std::vector<BigInt> hi;
                    for (const auto& x : h) hi.push_back(x.num() * (lcm / x.den()));
                    make_primitive(hi);
                    int pos = 0, neg = 0;
                    VertexSet on = 0;
                    for (int i = 0; i < m; ++i) {
                        Rational val(hi[0]);
                        for (int cc = 0; cc < 4; ++cc) val += Rational(hi[cc + 1]) * pts[i][cc];
                        if (val.sgn() > 0) pos++;
                        if (val.sgn() < 0) neg++;
                        if (val.sgn() == 0) on = set_with(on, i + 1);
                    }
                    if (pos && neg) continue;
                    if (pos)
                        for (auto& x : hi) x = -x;
                    found[hi] |= on;
                }
    return {found.begin(), found.end()};
}

}  // namespace polyenum::testing
