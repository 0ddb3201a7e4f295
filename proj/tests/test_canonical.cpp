#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/canonical.hpp"

#include <algorithm>
#include <random>
#include <thread>

using namespace polyenum;

namespace {

FacetComplex simplex_boundary() {
    std::vector<VertexSet> facets;
    for (int skip = 1; skip <= 5; ++skip) facets.push_back(full_set(5) & ~single(skip));
    return FacetComplex::make(5, facets, 4);
}

FacetComplex relabel(const FacetComplex& c, const std::vector<int>& perm) {
    // perm maps old vertex v to perm[v-1]
    std::vector<VertexSet> facets;
    for (VertexSet f : c.facets) {
        VertexSet g = 0;
        for (int v : set_elements(f)) g = set_with(g, perm[v - 1]);
        facets.push_back(g);
    }
    return FacetComplex::make(c.n, facets, c.d);
}

}  // namespace

TEST_CASE("relabeled simplex boundary gets the same key") {
    auto c = simplex_boundary();
    // permutation (1 5)(2 3)
    auto r = relabel(c, {5, 3, 2, 4, 1});
    CHECK(canonical_key(c) == canonical_key(r));
    CHECK(canonical_key(c).hex() == canonical_key(r).hex());
}

TEST_CASE("different sizes give different keys") {
    auto c = simplex_boundary();
    auto six = FacetComplex::make(
        6, {set_of({1, 2, 3, 4}), set_of({1, 2, 3, 5}), set_of({1, 2, 4, 6}), set_of({1, 3, 5, 6}),
            set_of({1, 4, 5, 6}), set_of({2, 3, 4, 5, 6})});
    CHECK(canonical_key(c) != canonical_key(six));
}

TEST_CASE("canonical form is a fixed point") {
    auto c = relabel(simplex_boundary(), {3, 1, 4, 5, 2});
    auto canon = canonical_form(c);
    CHECK(canonical_key(canon) == canonical_key(c));
    CHECK(canonical_form(canon).facets == canon.facets);
}

TEST_CASE("random relabeling invariance") {
    std::mt19937 rng(20240917);
    auto base = simplex_boundary();
    std::vector<int> perm{1, 2, 3, 4, 5};
    for (int trial = 0; trial < 500; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_key(relabel(base, perm)) == canonical_key(base));
    }
}

TEST_CASE("key round-trips through hex") {
    auto k = canonical_key(simplex_boundary());
    CHECK(CanonicalKey::from_hex(k.hex()) == k);
}

TEST_CASE("registry insert-if-new and merge") {
    Registry<int> reg;
    auto k1 = canonical_key(simplex_boundary());
    CHECK(reg.insert_if_new(k1, 7));
    CHECK_FALSE(reg.insert_if_new(k1, 8));
    CHECK(*reg.find(k1) == 7);

    Registry<int> other;
    auto k2 = CanonicalKey::from_bytes("other");
    other.insert_if_new(k2, 9);
    other.insert_if_new(k1, 10);
    reg.merge_from(std::move(other));
    CHECK(reg.size() == 2);
    CHECK(*reg.find(k1) == 7);  // first wins
    CHECK(*reg.find(k2) == 9);

    // replacement policy: smaller payload wins
    Registry<int> scored;
    scored.insert_if_new(k1, 7);
    scored.insert_or_replace(k1, 3, [](int a, int b) { return a < b; });
    CHECK(*scored.find(k1) == 3);
    scored.insert_or_replace(k1, 5, [](int a, int b) { return a < b; });
    CHECK(*scored.find(k1) == 3);
}

TEST_CASE("synchronized inserts match the sharded key set") {
    std::vector<CanonicalKey> keys;
    for (int i = 0; i < 40; ++i) keys.push_back(CanonicalKey::from_bytes("k" + std::to_string(i)));

    SynchronizedRegistry<int> shared;
    std::vector<std::thread> pool;
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&, w]() {
            for (size_t i = 0; i < keys.size(); ++i)
                if (i % 2 == static_cast<size_t>(w % 2)) shared.insert_if_new(keys[i], w);
        });
    for (auto& t : pool) t.join();
    auto merged = shared.take();

    Registry<int> serial;
    for (const auto& k : keys) serial.insert_if_new(k, 0);
    CHECK(merged.size() == serial.size());
    for (const auto& [k, v] : serial.entries()) CHECK(merged.contains(k));
}
