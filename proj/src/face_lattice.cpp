#include "polyenum/facet_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyenum {

std::vector<int> set_elements(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int b = __builtin_ctz(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

VertexSet set_of(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s = set_with(s, v);
    return s;
}

std::string set_str(VertexSet s) {
    std::string out;
    for (int v : set_elements(s)) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

FacetComplex FacetComplex::make(int n, std::vector<VertexSet> facets, int d) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("facet complex: n out of range");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return FacetComplex{n, d, std::move(facets)};
}

std::string FacetComplex::basic_check() const {
    const VertexSet full = full_set(n);
    for (VertexSet f : facets) {
        if (f & ~full) return "facet uses a vertex larger than n";
        if (set_size(f) < d) return "facet with fewer than d vertices";
    }
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j)
            if (i != j && (facets[i] & facets[j]) == facets[i])
                return "facet contained in another facet";
    for (int v = 1; v <= n; ++v) {
        int deg = 0;
        for (VertexSet f : facets) deg += set_contains(f, v);
        if (deg < d) return "vertex in fewer than d facets";
    }
    return "";
}

int FaceLattice::face_index(VertexSet f) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), f, [](VertexSet a, VertexSet b) {
        return std::make_pair(set_size(a), a) < std::make_pair(set_size(b), b);
    });
    if (it == faces.end() || *it != f) return -1;
    return static_cast<int>(it - faces.begin());
}

std::vector<int> FaceLattice::coatoms_above(VertexSet f) const {
    std::vector<int> out;
    for (size_t i = 0; i < generators.size(); ++i)
        if ((f & generators[i]) == f) out.push_back(static_cast<int>(i));
    return out;
}

FaceLattice build_closure_poset(const FacetComplex& complex) {
    const VertexSet full = full_set(complex.n);

    // Closure under intersection with the generators; every closure element
    // is an intersection of generators, so this reaches everything.
    std::vector<VertexSet> work(complex.facets);
    std::vector<char> seen(1u << complex.n, 0);
    for (VertexSet f : work) seen[f] = 1;
    for (size_t i = 0; i < work.size(); ++i) {
        for (VertexSet g : complex.facets) {
            VertexSet h = work[i] & g;
            if (!seen[h]) {
                seen[h] = 1;
                work.push_back(h);
            }
        }
    }
    VertexSet appearing = 0;
    for (VertexSet f : complex.facets) appearing |= f;
    for (int v : set_elements(appearing))
        if (!seen[single(v)]) {
            seen[single(v)] = 1;
            work.push_back(single(v));
        }
    if (!seen[0]) work.push_back(0);
    if (!seen[full]) work.push_back(full);

    FaceLattice lat;
    lat.n = complex.n;
    lat.generators = complex.facets;
    lat.faces = std::move(work);
    std::sort(lat.faces.begin(), lat.faces.end(), [](VertexSet a, VertexSet b) {
        return std::make_pair(set_size(a), a) < std::make_pair(set_size(b), b);
    });

    const size_t m = lat.faces.size();
    const size_t words = (m + 63) / 64;
    lat.below.assign(m, std::vector<std::uint64_t>(words, 0));
    lat.above.assign(m, std::vector<std::uint64_t>(words, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if ((lat.faces[j] & lat.faces[i]) == lat.faces[j]) {
                lat.below[i][j >> 6] |= 1ull << (j & 63);
                lat.above[j][i >> 6] |= 1ull << (i & 63);
            }

    // Height = longest chain from the bottom; faces are sorted by size, so a
    // single forward sweep suffices.
    lat.rank.assign(m, 0);
    for (size_t i = 1; i < m; ++i) {
        int best = 0;
        for (size_t j = 0; j < i; ++j)
            if (lat.leq(static_cast<int>(j), static_cast<int>(i)) && lat.faces[j] != lat.faces[i])
                best = std::max(best, lat.rank[j] + 1);
        lat.rank[i] = best;
    }
    lat.top_rank = lat.rank[m - 1];
    return lat;
}

FaceLattice build_face_poset(const FacetComplex& complex) {
    if (complex.facets.size() > 1)
        for (VertexSet f : complex.facets)
            if (f == full_set(complex.n))
                throw std::invalid_argument(
                    "build_face_poset: a facet equals the full vertex set");
    return build_closure_poset(complex);
}

bool is_graded_rank(const FaceLattice& lattice, int r) {
    if (lattice.top_rank != r) return false;
    // Graded iff every cover step raises the height by exactly one; then all
    // maximal chains run bottom to top in exactly top_rank steps.
    const int m = static_cast<int>(lattice.size());
    const size_t words = lattice.below.empty() ? 0 : lattice.below[0].size();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j || !lattice.leq(i, j)) continue;
            int between = 0;
            for (size_t w = 0; w < words; ++w)
                between += __builtin_popcountll(lattice.above[i][w] & lattice.below[j][w]);
            if (between == 2 && lattice.rank[j] != lattice.rank[i] + 1) return false;
        }
    }
    return true;
}

bool is_eulerian(const FaceLattice& lattice) {
    const int m = static_cast<int>(lattice.size());
    const size_t words = lattice.below.empty() ? 0 : lattice.below[0].size();
    std::vector<std::uint64_t> odd_mask(words, 0);
    for (int j = 0; j < m; ++j)
        if (lattice.rank[j] & 1) odd_mask[j >> 6] |= 1ull << (j & 63);

    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            if (!lattice.leq(x, y) || lattice.rank[y] - lattice.rank[x] < 1) continue;
            int odd = 0, total = 0;
            for (size_t w = 0; w < words; ++w) {
                std::uint64_t in = lattice.above[x][w] & lattice.below[y][w];
                total += __builtin_popcountll(in);
                odd += __builtin_popcountll(in & odd_mask[w]);
            }
            if (2 * odd != total) return false;
        }
    }
    return true;
}

bool is_interval_connected(const FaceLattice& lattice) {
    const int m = static_cast<int>(lattice.size());
    std::vector<int> uf(m);
    std::vector<int> members;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            if (!lattice.leq(x, y) || lattice.rank[y] - lattice.rank[x] < 3) continue;
            members.clear();
            for (int z = 0; z < m; ++z)
                if (z != x && z != y && lattice.leq(x, z) && lattice.leq(z, y))
                    members.push_back(z);
            if (members.size() <= 1) continue;
            std::iota(uf.begin(), uf.end(), 0);
            auto find = [&](int a) {
                while (uf[a] != a) a = uf[a] = uf[uf[a]];
                return a;
            };
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = a + 1; b < members.size(); ++b)
                    if (lattice.leq(members[a], members[b]) || lattice.leq(members[b], members[a]))
                        uf[find(members[a])] = find(members[b]);
            int root = find(members[0]);
            for (int z : members)
                if (find(z) != root) return false;
        }
    }
    return true;
}

FVector f_vector(const FaceLattice& lattice) {
    FVector fv;
    fv.f.assign(std::max(lattice.top_rank - 1, 0), 0);
    for (size_t i = 0; i < lattice.size(); ++i) {
        int r = lattice.rank[i];
        if (r >= 1 && r <= lattice.top_rank - 1) fv.f[r - 1]++;
    }
    return fv;
}

FlagFVector flag_f_vector(const FaceLattice& lattice) {
    FlagFVector fl;
    fl.f = f_vector(lattice).f;
    for (size_t i = 0; i < lattice.size(); ++i)
        if (lattice.rank[i] == lattice.top_rank - 1) fl.f02 += set_size(lattice.faces[i]);
    return fl;
}

std::string FVector::str() const {
    std::string out = "(";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f[i]);
    }
    return out + ")";
}

std::string FlagFVector::str() const {
    std::string out = "(";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f[i]);
    }
    return out + ";" + std::to_string(f02) + ")";
}

VertexGraph vertex_edge_graph(const FaceLattice& lattice) {
    VertexGraph g;
    g.n = lattice.n;
    g.adj.assign(lattice.n, 0);
    for (size_t i = 0; i < lattice.size(); ++i) {
        if (lattice.rank[i] != 2) continue;
        auto vs = set_elements(lattice.faces[i]);
        for (int u : vs)
            for (int v : vs)
                if (u != v) g.adj[u - 1] = set_with(g.adj[u - 1], v);
    }
    return g;
}

int VertexGraph::edge_count() const {
    int twice = 0;
    for (VertexSet a : adj) twice += set_size(a);
    return twice / 2;
}

ValidityResult check_sphere(const FacetComplex& complex) {
    std::string basic = complex.basic_check();
    if (!basic.empty()) return {false, basic};
    FaceLattice lat;
    try {
        lat = build_face_poset(complex);
    } catch (const std::invalid_argument&) {
        return {false, "facet equals the full vertex set"};
    }
    if (!is_graded_rank(lat, complex.d + 1)) return {false, "not graded of rank d+1"};
    int atoms = 0;
    for (size_t i = 0; i < lat.size(); ++i) atoms += (lat.rank[i] == 1);
    if (atoms != complex.n) return {false, "atoms do not cover all vertices"};
    if (!is_eulerian(lat)) return {false, "not Eulerian"};
    if (!is_interval_connected(lat)) return {false, "not interval connected"};
    return {true, ""};
}

}  // namespace polyenum
