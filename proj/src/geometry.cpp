#include "polyenum/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace polyenum {

namespace {

using IntVec = std::vector<BigInt>;

// homogeneous integer form (D, D x_1, .., D x_d), content-reduced, D > 0
IntVec hom_of(const QVec& x) {
    BigInt lcm(1);
    for (const auto& c : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    IntVec h(x.size() + 1);
    h[0] = lcm;
    for (size_t i = 0; i < x.size(); ++i) h[i + 1] = x[i].num() * (lcm / x[i].den());
    BigInt g = lcm;
    for (const auto& v : h) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : h) v /= g;
    return h;
}

QVec qvec_of(const IntVec& hom) {
    QVec x(hom.size() - 1);
    for (size_t i = 0; i + 1 < hom.size(); ++i) x[i] = Rational(hom[i + 1], hom[0]);
    return x;
}

BigInt eval_hom(const IntVec& h, const IntVec& hom) {
    BigInt acc(0);
    for (size_t i = 0; i < h.size(); ++i) acc += h[i] * hom[i];
    return acc;
}

// rank of an integer matrix (fraction-free elimination)
int rank_int(std::vector<IntVec> m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            BigInt a = m[r][c], b = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

// hyperplane through d affinely independent points in Q^d: the signed
// (d+1)-minors of the homogeneous coordinate matrix
IntVec hyperplane_through(const std::vector<IntVec>& homs) {
    const size_t d1 = homs[0].size();  // d+1 columns, d rows expected
    IntVec h(d1);
    for (size_t skip = 0; skip < d1; ++skip) {
        std::vector<IntVec> minor;
        for (const auto& row : homs) {
            IntVec r;
            for (size_t c = 0; c < d1; ++c)
                if (c != skip) r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        std::vector<std::vector<BigInt>> mm(minor.begin(), minor.end());
        BigInt det = det_int(mm);
        h[skip] = (skip % 2 == 0) ? det : BigInt(-det);
    }
    make_primitive(h);
    return h;
}

struct HomHash {
    size_t operator()(const IntVec& v) const {
        constexpr unsigned long kPrime = 0xffffffffffc5ul;
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& z : v) {
            std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
            if (z < 0) r = ~r;
            h = (h ^ r) * 0x100000001b3ull;
        }
        return h;
    }
};

}  // namespace

FacetComplex RationalPolytope::incidence_complex() const {
    std::vector<VertexSet> fs;
    for (const auto& f : facets) fs.push_back(f.incident);
    return FacetComplex::make(n, fs, 4);
}

BigInt RationalPolytope::simplicity_score() const {
    BigInt best(0);
    for (const auto& v : vertices)
        for (const auto& c : v) {
            BigInt s = abs(c.num()) + c.den();
            if (s > best) best = s;
        }
    return best;
}

// --- convex hull -----------------------------------------------------------

RationalPolytope convex_hull(const std::vector<QVec>& points) {
    const int d = 4;
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("convex_hull: points must live in Q^4");

    std::vector<IntVec> homs;
    homs.reserve(points.size());
    for (const auto& p : points) homs.push_back(hom_of(p));

    // greedy affinely independent starter set
    std::vector<int> start;
    std::vector<IntVec> basis;
    for (size_t i = 0; i < points.size() && start.size() < size_t(d + 1); ++i) {
        basis.push_back(homs[i]);
        if (rank_int(basis) == static_cast<int>(basis.size()))
            start.push_back(static_cast<int>(i));
        else
            basis.pop_back();
    }
    if (start.size() < size_t(d + 1)) throw DegeneracyError(static_cast<int>(start.size()) - 1);

    // processing order: starter simplex, then the rest as given
    std::vector<int> order = start;
    for (size_t i = 0; i < points.size(); ++i)
        if (std::find(start.begin(), start.end(), static_cast<int>(i)) == start.end())
            order.push_back(static_cast<int>(i));

    // strict interior reference point: centroid of the starter simplex
    QVec interior(d);
    for (int c = 0; c < d; ++c) {
        Rational acc(0);
        for (int i : start) acc += points[i][c];
        interior[c] = acc / Rational(d + 1);
    }
    IntVec interior_hom = hom_of(interior);

    struct HFacet {
        IntVec h;
        std::vector<int> support;  // indices into `points` lying on h
    };
    std::vector<HFacet> facets;
    std::vector<int> inserted;

    auto orient = [&](IntVec& h) {
        int s = sgn(eval_hom(h, interior_hom));
        if (s == 0) throw std::logic_error("convex_hull: interior point on a facet hyperplane");
        if (s > 0)
            for (auto& c : h) c = -c;
    };
    auto support_of = [&](const IntVec& h) {
        std::vector<int> sup;
        for (int q : inserted)
            if (eval_hom(h, homs[q]) == 0) sup.push_back(q);
        return sup;
    };

    // initial simplex
    for (int i : start) inserted.push_back(i);
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<IntVec> rows;
        for (int j = 0; j <= d; ++j)
            if (j != skip) rows.push_back(homs[start[j]]);
        HFacet f;
        f.h = hyperplane_through(rows);
        orient(f.h);
        f.support = support_of(f.h);
        facets.push_back(std::move(f));
    }

    for (size_t oi = d + 1; oi < order.size(); ++oi) {
        int p = order[oi];
        std::vector<int> evals(facets.size());
        bool outside = false;
        for (size_t f = 0; f < facets.size(); ++f) {
            evals[f] = sgn(eval_hom(facets[f].h, homs[p]));
            if (evals[f] > 0) outside = true;
        }
        if (!outside) continue;  // inside or on the boundary of the current hull

        // new facets spanned by horizon ridges and p
        std::map<IntVec, char> fresh;
        for (size_t f = 0; f < facets.size(); ++f) {
            if (evals[f] <= 0) continue;
            for (size_t g = 0; g < facets.size(); ++g) {
                if (evals[g] > 0) continue;
                std::vector<int> common;
                std::set_intersection(facets[f].support.begin(), facets[f].support.end(),
                                      facets[g].support.begin(), facets[g].support.end(),
                                      std::back_inserter(common));
                if (common.size() < size_t(d - 1)) continue;
                std::vector<IntVec> rows;
                for (int q : common) rows.push_back(homs[q]);
                if (rank_int(rows) != d - 1) continue;  // ridge: affine dimension d-2
                // d-1 independent ridge points plus p determine the hyperplane
                std::vector<IntVec> span;
                for (int q : common) {
                    span.push_back(homs[q]);
                    if (rank_int(span) != static_cast<int>(span.size())) span.pop_back();
                    if (span.size() == size_t(d - 1)) break;
                }
                span.push_back(homs[p]);
                IntVec h = hyperplane_through(span);
                orient(h);
                fresh.emplace(std::move(h), 1);
            }
        }

        std::vector<HFacet> next;
        std::map<IntVec, char> kept_h;
        for (size_t f = 0; f < facets.size(); ++f)
            if (evals[f] <= 0) {
                kept_h.emplace(facets[f].h, 1);
                next.push_back(std::move(facets[f]));
            }
        inserted.push_back(p);
        for (auto& nf : next)  // coplanar facets absorb p
            if (eval_hom(nf.h, homs[p]) == 0) nf.support.push_back(p);
        for (auto& [h, tag] : fresh) {
            if (kept_h.count(h)) continue;
            HFacet f;
            f.h = h;
            f.support = support_of(f.h);
            next.push_back(std::move(f));
        }
        facets = std::move(next);
    }

    // final vertices: points whose active hyperplane normals span Q^d
    std::vector<int> vertex_ids;
    for (int q : inserted) {
        std::vector<IntVec> normals;
        for (const auto& f : facets)
            if (std::find(f.support.begin(), f.support.end(), q) != f.support.end()) {
                IntVec lin(f.h.begin() + 1, f.h.end());
                normals.push_back(std::move(lin));
            }
        if (!normals.empty() && rank_int(normals) == d) vertex_ids.push_back(q);
    }
    std::sort(vertex_ids.begin(), vertex_ids.end());

    RationalPolytope poly;
    poly.n = static_cast<int>(vertex_ids.size());
    if (poly.n > kMaxVertices) throw std::invalid_argument("convex_hull: more than 15 vertices");
    std::vector<int> new_id(points.size(), -1);
    for (size_t i = 0; i < vertex_ids.size(); ++i) {
        new_id[vertex_ids[i]] = static_cast<int>(i) + 1;
        poly.vertices.push_back(points[vertex_ids[i]]);
    }
    for (const auto& f : facets) {
        RationalPolytope::Facet pf;
        pf.h = f.h;
        for (int q : f.support)
            if (new_id[q] > 0) pf.incident = set_with(pf.incident, new_id[q]);
        if (set_size(pf.incident) < d) throw std::logic_error("convex_hull: thin facet");
        poly.facets.push_back(std::move(pf));
    }
    // exact orientation invariant
    for (const auto& f : poly.facets)
        for (int v = 1; v <= poly.n; ++v) {
            int s = sgn(eval_hom(f.h, hom_of(poly.vertices[v - 1])));
            bool inc = set_contains(f.incident, v);
            if ((inc && s != 0) || (!inc && s >= 0))
                throw std::logic_error("convex_hull: orientation invariant violated");
        }
    poly.key = canonical_key(poly.incidence_complex());
    return poly;
}

bool verify_realization(const FacetComplex& sphere, const std::vector<QVec>& coords,
                        std::string* diagnostic) {
    if (static_cast<int>(coords.size()) != sphere.n) {
        if (diagnostic) *diagnostic = "coordinate count differs from the sphere's vertex count";
        return false;
    }
    try {
        auto hull = convex_hull(coords);
        if (hull.n != sphere.n) {
            if (diagnostic) *diagnostic = "hull loses vertices";
            return false;
        }
        if (hull.key != canonical_key(sphere)) {
            if (diagnostic) *diagnostic = "combinatorial types differ";
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        if (diagnostic) *diagnostic = e.what();
        return false;
    }
}

// --- bounding cuboid ----------------------------------------------------------

namespace {

std::vector<IntVec> normalized_hyperplanes(const std::vector<std::vector<BigInt>>& hyperplanes) {
    std::vector<IntVec> hs;
    for (const auto& h : hyperplanes) {
        IntVec v(h);
        bool nonzero = false;
        for (size_t i = 1; i < v.size(); ++i) nonzero |= (v[i] != 0);
        if (!nonzero) throw std::invalid_argument("hyperplane with zero linear part");
        make_primitive(v);
        hs.push_back(std::move(v));
    }
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
            if (hs[i] == hs[j]) throw std::invalid_argument("duplicate hyperplane");
    return hs;
}

// solutions of d independent constraints among the given ones
std::vector<QVec> constraint_vertices(const std::vector<IntVec>& hs, int d) {
    std::vector<QVec> out;
    const int k = static_cast<int>(hs.size());
    std::vector<int> idx(d);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == d) {
            std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) a[r][c] = hs[idx[r]][c + 1];
            BigInt det = det_int(a);
            if (det == 0) return;
            QVec x(d);
            for (int c = 0; c < d; ++c) {
                auto m = a;
                for (int r = 0; r < d; ++r) m[r][c] = -hs[idx[r]][0];
                x[c] = Rational(det_int(m), det);
            }
            out.push_back(std::move(x));
            return;
        }
        for (int i = from; i < k; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

Cuboid bounding_cuboid(const std::vector<std::vector<BigInt>>& hyperplanes) {
    if (hyperplanes.empty()) throw std::invalid_argument("bounding_cuboid: no hyperplanes");
    const int d = static_cast<int>(hyperplanes[0].size()) - 1;
    auto hs = normalized_hyperplanes(hyperplanes);
    auto verts = constraint_vertices(hs, d);
    if (verts.empty())
        throw std::invalid_argument("bounding_cuboid: the arrangement has no vertex");
    Cuboid box;
    box.lo.assign(d, Rational(0));
    box.hi.assign(d, Rational(0));
    for (int c = 0; c < d; ++c) {
        Rational lo = verts[0][c], hi = verts[0][c];
        for (const auto& v : verts) {
            if (v[c] < lo) lo = v[c];
            if (v[c] > hi) hi = v[c];
        }
        box.lo[c] = lo - Rational(1);
        box.hi[c] = hi + Rational(1);
    }
    return box;
}

// --- arrangement faces -----------------------------------------------------------

std::vector<ArrangementFace> arrangement_faces(const std::vector<std::vector<BigInt>>& hyperplanes,
                                               const Cuboid& box) {
    const int d = box.dim();
    const int k = static_cast<int>(hyperplanes.size());
    auto hs = normalized_hyperplanes(hyperplanes);
    for (const auto& h : hs)
        if (static_cast<int>(h.size()) != d + 1)
            throw std::invalid_argument("arrangement_faces: dimension mismatch");

    // constraints: the k hyperplanes followed by the 2d box walls
    std::vector<IntVec> cons = hs;
    for (int c = 0; c < d; ++c) {  // x_c - lo_c >= 0
        IntVec w(d + 1, BigInt(0));
        w[0] = -box.lo[c].num();
        w[c + 1] = box.lo[c].den();
        cons.push_back(std::move(w));
    }
    for (int c = 0; c < d; ++c) {  // hi_c - x_c >= 0
        IntVec w(d + 1, BigInt(0));
        w[0] = box.hi[c].num();
        w[c + 1] = -box.hi[c].den();
        cons.push_back(std::move(w));
    }
    const int m = static_cast<int>(cons.size());

    // candidate points: all 0-dimensional intersections inside the box
    struct CPoint {
        IntVec hom;
        std::vector<std::int8_t> sign;  // over the k hyperplanes
        std::uint64_t active = 0;       // over all m constraints
    };
    std::vector<CPoint> pts;
    std::unordered_map<IntVec, int, HomHash> seen;
    {
        std::vector<int> idx(d);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == d) {
                std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) a[r][c] = cons[idx[r]][c + 1];
                BigInt det = det_int(a);
                if (det == 0) return;
                IntVec hom(d + 1);
                hom[0] = det;
                for (int c = 0; c < d; ++c) {
                    auto mm = a;
                    for (int r = 0; r < d; ++r) mm[r][c] = -cons[idx[r]][0];
                    hom[c + 1] = det_int(mm);
                }
                if (hom[0] < 0)
                    for (auto& z : hom) z = -z;
                BigInt g = hom[0];
                for (const auto& z : hom) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
                if (g > 1)
                    for (auto& z : hom) z /= g;
                if (seen.count(hom)) return;
                CPoint p;
                p.sign.resize(k);
                for (int i = 0; i < m; ++i) {
                    int s = sgn(eval_hom(cons[i], hom));
                    if (i >= k && s < 0) return;  // outside the box
                    if (i < k) p.sign[i] = static_cast<std::int8_t>(s);
                    if (s == 0) p.active |= 1ull << i;
                }
                seen.emplace(hom, static_cast<int>(pts.size()));
                p.hom = std::move(hom);
                pts.push_back(std::move(p));
                return;
            }
            for (int i = from; i < m; ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
    }
    const int np = static_cast<int>(pts.size());
    if (np == 0) throw std::invalid_argument("arrangement_faces: empty clipped arrangement");

    // generic interior start point via a moment-curve probe
    std::vector<std::int8_t> start_sign(k, 0);
    {
        const int tries = k * d + 2;
        Rational delta = box.hi[0] - box.lo[0];
        for (int c = 1; c < d; ++c)
            if (box.hi[c] - box.lo[c] < delta) delta = box.hi[c] - box.lo[c];
        BigInt tpow(1);
        for (int i = 0; i < d; ++i) tpow *= tries;
        delta = delta / Rational(BigInt(4 * tpow));
        bool found = false;
        for (int t = 1; t <= tries && !found; ++t) {
            QVec c(d);
            BigInt ti(1);
            for (int i = 0; i < d; ++i) {
                ti *= t;
                c[i] = (box.lo[i] + box.hi[i]) / Rational(2) + delta * Rational(ti);
            }
            IntVec hom = hom_of(c);
            bool generic = true;
            for (int i = 0; i < k && generic; ++i) {
                int s = sgn(eval_hom(cons[i], hom));
                if (s == 0) generic = false;
                start_sign[i] = static_cast<std::int8_t>(s);
            }
            found = generic;
        }
        if (!found) throw std::logic_error("arrangement_faces: no generic start point found");
    }

    struct FaceKey {
        std::vector<std::int8_t> sig;
        bool operator<(const FaceKey& o) const { return sig < o.sig; }
    };
    std::map<FaceKey, ArrangementFace> out_faces;
    std::map<std::vector<std::int8_t>, char> visited;
    std::deque<std::vector<std::int8_t>> queue;
    visited.emplace(start_sign, 1);
    queue.push_back(start_sign);

    std::vector<int> compat;
    while (!queue.empty()) {
        std::vector<std::int8_t> alpha = std::move(queue.front());
        queue.pop_front();

        compat.clear();
        for (int p = 0; p < np; ++p) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (pts[p].sign[i] != 0 && pts[p].sign[i] != alpha[i]) ok = false;
            if (ok) compat.push_back(p);
        }
        if (compat.empty()) throw std::logic_error("arrangement_faces: reached an empty cell");

        // facets of the cell polytope among all constraints
        std::vector<std::vector<std::uint64_t>> generators;
        const size_t words = (compat.size() + 63) / 64;
        std::vector<IntVec> rows;
        for (int i = 0; i < m; ++i) {
            rows.clear();
            std::vector<std::uint64_t> onset(words, 0);
            for (size_t c = 0; c < compat.size(); ++c)
                if (pts[compat[c]].active >> i & 1) {
                    onset[c >> 6] |= 1ull << (c & 63);
                    rows.push_back(pts[compat[c]].hom);
                }
            if (rows.empty() || rank_int(rows) != d) continue;  // not a (d-1)-face
            generators.push_back(std::move(onset));
            // wall over an input hyperplane: schedule the neighbouring cell
            if (i < k) {
                auto nb = alpha;
                nb[i] = -nb[i];
                if (visited.emplace(nb, 1).second) queue.push_back(nb);
            }
        }

        // intersection closure of the facet point sets = faces of the cell
        std::map<std::vector<std::uint64_t>, char> closed;
        std::vector<std::uint64_t> full(words, ~0ull);
        if (compat.size() % 64) full[words - 1] = (1ull << (compat.size() % 64)) - 1;
        closed.emplace(full, 1);
        std::deque<std::vector<std::uint64_t>> cq{full};
        for (const auto& g : generators)
            if (closed.emplace(g, 1).second) cq.push_back(g);
        while (!cq.empty()) {
            auto cur = std::move(cq.front());
            cq.pop_front();
            for (const auto& g : generators) {
                std::vector<std::uint64_t> meet(words);
                bool empty = true;
                for (size_t w = 0; w < words; ++w) {
                    meet[w] = cur[w] & g[w];
                    empty &= (meet[w] == 0);
                }
                if (empty) continue;
                if (closed.emplace(meet, 1).second) cq.push_back(meet);
            }
        }

        // classify each closed point set as an arrangement face or clipping junk
        for (const auto& [mask, tag] : closed) {
            FaceKey key;
            key.sig.assign(k, 0);
            std::vector<int> members;
            for (size_t c = 0; c < compat.size(); ++c)
                if (mask[c >> 6] >> (c & 63) & 1) members.push_back(compat[c]);
            for (int i = 0; i < k; ++i) {
                std::int8_t s = 0;
                for (int p : members)
                    if (pts[p].sign[i] != 0) {
                        s = pts[p].sign[i];
                        break;
                    }
                key.sig[i] = s == 0 ? 0 : alpha[i];
            }
            if (out_faces.count(key)) continue;

            // keep only genuine arrangement faces: the point set must span
            // the whole flat cut out by the zero hyperplanes (cell-polytope
            // faces on the box boundary span less and share a sign vector
            // with the real face, so no negative memoization here)
            std::vector<IntVec> zero_normals;
            for (int i = 0; i < k; ++i)
                if (key.sig[i] == 0) {
                    IntVec lin(hs[i].begin() + 1, hs[i].end());
                    zero_normals.push_back(std::move(lin));
                }
            int flat_dim = d - (zero_normals.empty() ? 0 : rank_int(zero_normals));
            std::vector<IntVec> homs;
            for (int p : members) homs.push_back(pts[p].hom);
            int face_dim = rank_int(homs) - 1;
            if (face_dim != flat_dim) continue;
            ArrangementFace face;
            face.sign = key.sig;
            face.dim = face_dim;
            for (int p : members) face.verts.push_back(qvec_of(pts[p].hom));
            face.rep = interior_point_barycenter(face);
            out_faces.emplace(std::move(key), std::move(face));
        }
    }

    std::vector<ArrangementFace> out;
    out.reserve(out_faces.size());
    for (auto& [key, face] : out_faces) out.push_back(std::move(face));
    return out;
}

QVec interior_point_barycenter(const ArrangementFace& face) {
    if (face.verts.empty()) throw std::invalid_argument("barycenter of an empty face");
    const size_t d = face.verts[0].size();
    QVec acc(d, Rational(0));
    for (const auto& v : face.verts)
        for (size_t c = 0; c < d; ++c) acc[c] += v[c];
    for (size_t c = 0; c < d; ++c) acc[c] /= Rational(static_cast<long>(face.verts.size()));
    return acc;
}

QVec interior_point_simple(const ArrangementFace& face, const SimpleRuleOptions& opts) {
    const int t = face.dim;
    const int nv = static_cast<int>(face.verts.size());
    QVec best = interior_point_barycenter(face);
    auto score_of = [](const QVec& p) {
        BigInt s(0);
        for (const auto& c : p) {
            BigInt v = abs(c.num()) + c.den();
            if (v > s) s = v;
        }
        return s;
    };
    BigInt best_score = score_of(best);
    bool have_subset_best = false;

    std::vector<IntVec> homs;
    for (const auto& v : face.verts) homs.push_back(hom_of(v));

    long budget = opts.max_subsets;
    std::vector<int> pick;
    auto consider = [&]() {
        std::vector<IntVec> rows;
        for (int i : pick) rows.push_back(homs[i]);
        if (rank_int(rows) != t + 1) return;  // must span the face's affine hull
        const size_t d = face.verts[0].size();
        QVec bary(d, Rational(0));
        for (int i : pick)
            for (size_t c = 0; c < d; ++c) bary[c] += face.verts[i][c];
        for (size_t c = 0; c < d; ++c) bary[c] /= Rational(static_cast<long>(pick.size()));
        BigInt s = score_of(bary);
        if (!have_subset_best || s < best_score ||
            (s == best_score && std::lexicographical_compare(bary.begin(), bary.end(),
                                                             best.begin(), best.end()))) {
            best = std::move(bary);
            best_score = std::move(s);
            have_subset_best = true;
        }
    };
    std::function<void(int, int, int)> rec = [&](int from, int left, int) {
        if (budget <= 0) return;
        if (left == 0) {
            --budget;
            consider();
            return;
        }
        for (int i = from; i < nv - left + 1 && budget > 0; ++i) {
            pick.push_back(i);
            rec(i + 1, left - 1, 0);
            pick.pop_back();
        }
    };
    for (int size = t + 1; size <= std::min(nv, t + 3); ++size) rec(0, size, 0);
    return best;
}

// --- inductive generation -------------------------------------------------------

RationalPolytope standard_simplex() {
    std::vector<QVec> pts;
    pts.push_back(QVec(4, Rational(0)));
    for (int i = 0; i < 4; ++i) {
        QVec e(4, Rational(0));
        e[i] = Rational(1);
        pts.push_back(std::move(e));
    }
    return convex_hull(pts);
}

namespace {

bool simpler_realization(const RationalPolytope& a, const RationalPolytope& b) {
    BigInt sa = a.simplicity_score(), sb = b.simplicity_score();
    if (sa != sb) return sa < sb;
    for (size_t i = 0; i < a.vertices.size() && i < b.vertices.size(); ++i)
        for (size_t c = 0; c < 4; ++c) {
            if (a.vertices[i][c] < b.vertices[i][c]) return true;
            if (b.vertices[i][c] < a.vertices[i][c]) return false;
        }
    return false;
}

Registry<RationalPolytope> generate_for_seeds(const std::vector<RationalPolytope>& seeds, int k,
                                              const GenerateOptions& opts) {
    Registry<RationalPolytope> out;
    for (const auto& seed : seeds) {
        std::vector<std::vector<BigInt>> hyperplanes;
        for (const auto& f : seed.facets) hyperplanes.push_back(f.h);
        Cuboid box = bounding_cuboid(hyperplanes);
        auto faces = arrangement_faces(hyperplanes, box);
        for (const auto& face : faces) {
            QVec p = opts.rule == PointRule::Barycenter ? face.rep
                                                        : interior_point_simple(face, opts.simple);
            std::vector<QVec> pts = seed.vertices;
            pts.push_back(std::move(p));
            RationalPolytope hull = convex_hull(pts);
            if (hull.n != k) continue;
            CanonicalKey key = hull.key;
            out.insert_or_replace(key, std::move(hull), simpler_realization);
        }
    }
    return out;
}

}  // namespace

Registry<RationalPolytope> generate_polytopes(const std::vector<RationalPolytope>& seeds, int k,
                                              const GenerateOptions& opts) {
    for (const auto& s : seeds)
        if (s.n != k - 1)
            throw std::invalid_argument("generate_polytopes: seeds must have k-1 vertices");
    std::vector<RationalPolytope> ordered = seeds;
    std::sort(ordered.begin(), ordered.end(),
              [](const RationalPolytope& a, const RationalPolytope& b) { return a.key < b.key; });

    const int w = std::max(1, std::min<int>(opts.workers, static_cast<int>(ordered.size())));
    if (w == 1) return generate_for_seeds(ordered, k, opts);

    std::vector<std::vector<RationalPolytope>> shards(w);
    for (size_t i = 0; i < ordered.size(); ++i) shards[i % w].push_back(ordered[i]);
    std::vector<Registry<RationalPolytope>> parts(w);
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i)
        pool.emplace_back([&, i]() { parts[i] = generate_for_seeds(shards[i], k, opts); });
    for (auto& t : pool) t.join();
    Registry<RationalPolytope> merged = std::move(parts[0]);
    for (int i = 1; i < w; ++i) merged.merge_from(std::move(parts[i]), simpler_realization);
    return merged;
}

}  // namespace polyenum
