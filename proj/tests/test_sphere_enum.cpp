#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/sphere_enum.hpp"

#include "polyenum/io.hpp"

#include <cstdio>
#include <fstream>

using namespace polyenum;

namespace {

FacetComplex simplex_boundary() {
    std::vector<VertexSet> facets;
    for (int skip = 1; skip <= 5; ++skip) facets.push_back(full_set(5) & ~single(skip));
    return FacetComplex::make(5, facets, 4);
}

FacetComplex octahedron() {
    return FacetComplex::make(6,
                              {set_of({1, 2, 5}), set_of({2, 3, 5}), set_of({3, 4, 5}),
                               set_of({1, 4, 5}), set_of({1, 2, 6}), set_of({2, 3, 6}),
                               set_of({3, 4, 6}), set_of({1, 4, 6})},
                              3);
}

}  // namespace

TEST_CASE("untriangulating the simplex boundary fails validity") {
    auto M = simplex_boundary();
    auto U = untriangulate(M, set_of({1, 2, 3, 4}), set_of({1, 2, 3, 5}));
    CHECK(U.facets.size() == 4);
    CHECK(std::count(U.facets.begin(), U.facets.end(), full_set(5)) == 1);
    CHECK_FALSE(check_sphere(U).valid);
}

TEST_CASE("untriangulate rejects non-ridge intersections") {
    // square pyramid: apex facets meet the base in triangles, but two
    // opposite wall facets meet only in the apex
    auto M = FacetComplex::make(
        5, {set_of({1, 2, 5}), set_of({2, 3, 5}), set_of({3, 4, 5}), set_of({1, 4, 5}),
            set_of({1, 2, 3, 4})},
        3);
    CHECK_THROWS_AS(untriangulate(M, set_of({1, 2, 5}), set_of({3, 4, 5})), std::invalid_argument);
}

TEST_CASE("octahedron merge example: quadrilateral facet appears, stays valid") {
    auto M = octahedron();
    auto U = untriangulate(M, set_of({1, 2, 5}), set_of({2, 3, 5}));
    CHECK(U.facets.size() == 7);
    CHECK(std::count(U.facets.begin(), U.facets.end(), set_of({1, 2, 3, 5})) == 1);
    CHECK(check_sphere(U).valid);
    auto lat = build_face_poset(U);
    CHECK(f_vector(lat).str() == "(6,11,7)");
    // edge 25 is gone from the closure
    CHECK(lat.face_index(set_of({2, 5})) == -1);
}

TEST_CASE("simplicial seed counts for n = 5, 6, 7") {
    CHECK(enumerate_simplicial(5).size() == 1);
    CHECK(enumerate_simplicial(6).size() == 2);
    CHECK(enumerate_simplicial(7).size() == 5);
    CHECK_THROWS_AS(enumerate_simplicial(9), std::invalid_argument);
}

TEST_CASE("sphere enumeration counts for n = 5, 6, 7") {
    auto s5 = enumerate_spheres(enumerate_simplicial(5));
    CHECK(s5.types.size() == 1);
    auto s6 = enumerate_spheres(enumerate_simplicial(6));
    CHECK(s6.types.size() == 4);
    auto s7 = enumerate_spheres(enumerate_simplicial(7));
    CHECK(s7.types.size() == 31);

    // every registry member passes the checks; each seed key is present
    for (const auto& [key, facets] : s7.types.entries())
        CHECK(check_sphere(FacetComplex{7, 4, facets}).valid);
    for (const auto& seed : enumerate_simplicial(7)) CHECK(s7.types.contains(canonical_key(seed)));

    // closure: every one-step untriangulation of a member is memoized
    for (const auto& [key, facets] : s7.types.entries()) {
        FacetComplex M{7, 4, facets};
        auto lat = build_face_poset(M);
        for (size_t i = 0; i < facets.size(); ++i)
            for (size_t j = i + 1; j < facets.size(); ++j) {
                int idx = lat.face_index(facets[i] & facets[j]);
                if (idx < 0 || lat.rank[idx] != 3) continue;
                auto U = untriangulate(M, facets[i], facets[j]);
                auto ukey = canonical_key(U);
                CHECK((s7.types.contains(ukey) || s7.non_types.count(ukey) > 0));
            }
    }
}

TEST_CASE("worker count does not change the enumerated key set") {
    auto seeds = enumerate_simplicial(7);
    auto serial = enumerate_spheres(seeds, 1);
    auto parallel = enumerate_spheres(seeds, 3);
    CHECK(serial.types.size() == parallel.types.size());
    for (const auto& [key, facets] : serial.types.entries()) CHECK(parallel.types.contains(key));
}

TEST_CASE("facet count drops by exactly one per untriangulation step") {
    auto M = octahedron();
    auto U = untriangulate(M, set_of({1, 2, 5}), set_of({2, 3, 5}));
    CHECK(U.facets.size() + 1 == M.facets.size());
}

TEST_CASE("seed ingestion: round trip, duplicates, malformed input") {
    auto seeds = enumerate_simplicial(6);
    std::string path = "/tmp/polyenum_test_seeds.txt";
    {
        std::vector<SphereRecord> recs;
        for (const auto& s : seeds) recs.push_back(SphereRecord::from_complex(s));
        // a relabeled duplicate of the first seed: swap vertices 1 and 6
        FacetComplex dup = seeds[0];
        for (auto& f : dup.facets) {
            VertexSet g = f & ~(single(1) | single(6));
            if (set_contains(f, 1)) g = set_with(g, 6);
            if (set_contains(f, 6)) g = set_with(g, 1);
            f = g;
        }
        std::sort(dup.facets.begin(), dup.facets.end());
        recs.push_back(SphereRecord::from_complex(dup));
        write_sphere_file(path, recs);
    }
    auto res = ingest_seeds(path);
    CHECK(res.seeds.size() == seeds.size());
    CHECK(res.warnings.size() == 1);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "[1123,1234]\n";
    }
    CHECK_THROWS_AS(read_sphere_file(path), ParseError);
    std::remove(path.c_str());
}
