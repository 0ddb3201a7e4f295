#include "polyenum/sphere_enum.hpp"

#include "polyenum/io.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace polyenum {

namespace {

std::vector<VertexSet> untriangulate_facets(const std::vector<VertexSet>& facets, VertexSet f1,
                                            VertexSet f2) {
    std::vector<VertexSet> out;
    out.reserve(facets.size() - 1);
    for (VertexSet f : facets)
        if (f != f1 && f != f2) out.push_back(f);
    out.push_back(f1 | f2);
    std::sort(out.begin(), out.end());
    return out;
}

// cheap rejections from the union shape before any lattice is built
bool prefilter_ok(const std::vector<VertexSet>& facets, VertexSet f1, VertexSet f2) {
    const VertexSet merged = f1 | f2;
    const VertexSet ridge = f1 & f2;
    for (VertexSet g : facets) {
        if (g == f1 || g == f2) continue;
        if ((g & merged) == g) return false;  // union swallows another facet
        if ((g & f1) && (g & f2) && !(g & ridge)) return false;
    }
    return true;
}

}  // namespace

FacetComplex untriangulate(const FacetComplex& M, VertexSet f1, VertexSet f2) {
    auto has = [&](VertexSet f) {
        return std::find(M.facets.begin(), M.facets.end(), f) != M.facets.end();
    };
    if (!has(f1) || !has(f2) || f1 == f2)
        throw std::invalid_argument("untriangulate: f1, f2 must be distinct facets");
    auto lat = build_face_poset(M);
    int idx = lat.face_index(f1 & f2);
    if (idx < 0 || lat.rank[idx] != M.d - 1)
        throw std::invalid_argument("untriangulate: f1 and f2 do not meet in a ridge");
    FacetComplex out;
    out.n = M.n;
    out.d = M.d;
    out.facets = untriangulate_facets(M.facets, f1, f2);
    return out;
}

namespace {

EnumerationResult enumerate_serial(const std::vector<FacetComplex>& seeds) {
    EnumerationResult res;
    if (seeds.empty()) return res;
    const int n = seeds.front().n;
    const int d = seeds.front().d;

    std::vector<std::vector<VertexSet>> stack;
    auto consider = [&](std::vector<VertexSet> facets, bool prefiltered_ok) {
        auto key = canonical_key(FacetComplex{n, d, facets});
        if (res.types.contains(key) || res.non_types.count(key)) return;
        res.candidates_checked++;
        bool valid = prefiltered_ok && check_sphere(FacetComplex{n, d, facets}).valid;
        if (valid) {
            stack.push_back(facets);
            res.types.insert_if_new(key, std::move(facets));
        } else {
            res.non_types.emplace(key, 1);
        }
    };

    for (const auto& seed : seeds) {
        if (seed.n != n || seed.d != d)
            throw std::invalid_argument("enumerate_spheres: seeds disagree on n or d");
        consider(seed.facets, true);
    }

    while (!stack.empty()) {
        std::vector<VertexSet> facets = std::move(stack.back());
        stack.pop_back();
        FacetComplex M{n, d, facets};
        auto lat = build_face_poset(M);
        for (size_t i = 0; i < facets.size(); ++i) {
            for (size_t j = i + 1; j < facets.size(); ++j) {
                VertexSet ridge = facets[i] & facets[j];
                int idx = lat.face_index(ridge);
                if (idx < 0 || lat.rank[idx] != d - 1) continue;
                consider(untriangulate_facets(facets, facets[i], facets[j]),
                         prefilter_ok(facets, facets[i], facets[j]));
            }
        }
    }
    return res;
}

}  // namespace

EnumerationResult enumerate_spheres(const std::vector<FacetComplex>& seeds, int workers) {
    if (workers <= 1 || seeds.size() <= 1) return enumerate_serial(seeds);
    const int w = std::min<int>(workers, static_cast<int>(seeds.size()));
    std::vector<std::vector<FacetComplex>> shards(w);
    for (size_t i = 0; i < seeds.size(); ++i) shards[i % w].push_back(seeds[i]);
    std::vector<EnumerationResult> parts(w);
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i)
        pool.emplace_back([&, i]() { parts[i] = enumerate_serial(shards[i]); });
    for (auto& t : pool) t.join();
    EnumerationResult merged = std::move(parts[0]);
    for (int i = 1; i < w; ++i) {
        merged.types.merge_from(std::move(parts[i].types));
        for (auto& [k, v] : parts[i].non_types) merged.non_types.emplace(k, v);
        merged.candidates_checked += parts[i].candidates_checked;
    }
    // a candidate may be valid in one shard and unseen in another
    for (const auto& [k, v] : merged.types.entries()) merged.non_types.erase(k);
    return merged;
}

// --- simplicial seed enumeration -------------------------------------------

namespace {

// DFS over facet insertions: the next facet always closes the smallest open
// ridge, so every labeled complex containing the base facet is generated
// along exactly one path.
struct SimplicialSearch {
    int n;
    int max_facets;
    std::vector<VertexSet> facets;
    std::vector<int> ridge_count;  // per 3-subset mask
    Registry<std::vector<VertexSet>> found;

    explicit SimplicialSearch(int n)
        : n(n), max_facets(n * (n - 3) / 2), ridge_count(1u << n, 0) {}

    static std::array<VertexSet, 4> ridges_of(VertexSet f) {
        std::array<VertexSet, 4> out{};
        auto el = set_elements(f);
        for (int i = 0; i < 4; ++i) out[i] = f & ~single(el[i]);
        return out;
    }

    VertexSet smallest_open_ridge() const {
        VertexSet best = 0;
        std::vector<int> best_el;
        for (VertexSet f : facets)
            for (VertexSet r : ridges_of(f))
                if (ridge_count[r] == 1) {
                    auto el = set_elements(r);
                    if (best == 0 || el < best_el) {
                        best = r;
                        best_el = el;
                    }
                }
        return best;
    }

    bool vertex_links_are_spheres() const {
        for (int v = 1; v <= n; ++v) {
            std::vector<VertexSet> tris;
            for (VertexSet f : facets)
                if (set_contains(f, v)) tris.push_back(f & ~single(v));
            if (tris.empty()) return false;
            // link edges and vertices
            VertexSet verts = 0;
            int edge_count = 0;
            std::vector<char> seen_edge(1u << n, 0);
            for (VertexSet t : tris) {
                verts |= t;
                for (int u : set_elements(t)) {
                    VertexSet e = t & ~single(u);
                    if (!seen_edge[e]) {
                        seen_edge[e] = 1;
                        ++edge_count;
                    }
                }
            }
            // Euler characteristic of the link surface must be 2
            if (set_size(verts) - edge_count + static_cast<int>(tris.size()) != 2) return false;
            // connectivity of the link through shared edges
            std::vector<int> uf(tris.size());
            std::iota(uf.begin(), uf.end(), 0);
            auto find = [&](int a) {
                while (uf[a] != a) a = uf[a] = uf[uf[a]];
                return a;
            };
            for (size_t a = 0; a < tris.size(); ++a)
                for (size_t b = a + 1; b < tris.size(); ++b)
                    if (set_size(tris[a] & tris[b]) == 2) uf[find(a)] = uf[find(b)];
            for (size_t a = 1; a < tris.size(); ++a)
                if (find(a) != find(0)) return false;
        }
        return true;
    }

    void complete() {
        VertexSet all = 0;
        for (VertexSet f : facets) all |= f;
        if (all != full_set(n)) return;
        if (!vertex_links_are_spheres()) return;
        FacetComplex c{n, 4, facets};
        std::sort(c.facets.begin(), c.facets.end());
        found.insert_if_new(canonical_key(c), c.facets);
    }

    void dfs() {
        VertexSet open = smallest_open_ridge();
        if (!open) {
            complete();
            return;
        }
        if (static_cast<int>(facets.size()) >= max_facets) return;
        for (int x = 1; x <= n; ++x) {
            if (set_contains(open, x)) continue;
            VertexSet f = set_with(open, x);
            if (std::find(facets.begin(), facets.end(), f) != facets.end()) continue;
            bool ok = true;
            for (VertexSet r : ridges_of(f))
                if (ridge_count[r] >= 2) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            facets.push_back(f);
            for (VertexSet r : ridges_of(f)) ridge_count[r]++;
            dfs();
            for (VertexSet r : ridges_of(f)) ridge_count[r]--;
            facets.pop_back();
        }
    }
};

}  // namespace

std::vector<FacetComplex> enumerate_simplicial(int n) {
    if (n < 5) throw std::invalid_argument("enumerate_simplicial: need n >= 5");
    if (n > 8)
        throw std::invalid_argument(
            "enumerate_simplicial: supports n <= 8; ingest an external census for larger n");
    SimplicialSearch search(n);
    VertexSet base = set_of({1, 2, 3, 4});
    search.facets.push_back(base);
    for (VertexSet r : SimplicialSearch::ridges_of(base)) search.ridge_count[r]++;
    search.dfs();

    std::vector<FacetComplex> out;
    for (const auto& [key, facets] : search.found.entries())
        out.push_back(FacetComplex{n, 4, facets});
    std::sort(out.begin(), out.end(), [](const FacetComplex& a, const FacetComplex& b) {
        return a.facets < b.facets;
    });
    return out;
}

IngestResult ingest_seeds(const std::string& path) {
    IngestResult res;
    auto records = read_sphere_file(path);
    if (records.empty()) throw std::runtime_error("ingest_seeds: no records in " + path);
    const int n = records.front().n;
    Registry<char> seen;
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        if (rec.n != n)
            throw std::runtime_error("ingest_seeds: record " + std::to_string(i + 1) +
                                     " has a different vertex count");
        FacetComplex c = rec.complex();
        for (VertexSet f : c.facets)
            if (set_size(f) != c.d)
                throw std::runtime_error("ingest_seeds: record " + std::to_string(i + 1) +
                                         " is not simplicial");
        auto validity = check_sphere(c);
        if (!validity.valid)
            throw std::runtime_error("ingest_seeds: record " + std::to_string(i + 1) +
                                     " fails validation: " + validity.failed_check);
        if (!seen.insert_if_new(rec.key, 1)) {
            res.warnings.push_back("duplicate seed dropped at record " + std::to_string(i + 1));
            continue;
        }
        res.seeds.push_back(std::move(c));
    }
    return res;
}

}  // namespace polyenum
