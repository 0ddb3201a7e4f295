// Acceptance suite: reproduces the classification counts and table rows at
// desk scale (n <= 8 plus the five explicit 9-vertex spheres) and checks the
// module property suites. Prints one PASS/FAIL line per criterion.

#include "polyenum/chirotope.hpp"
#include "polyenum/geometry.hpp"
#include "polyenum/io.hpp"
#include "polyenum/linprog.hpp"
#include "polyenum/sphere_enum.hpp"

#include "hull_oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace polyenum;

namespace {

int g_failures = 0;
std::string g_data_dir = "data";

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << number << " (" << name << ", " << secs
              << "s)" << (detail.empty() ? "" : ": " + detail) << std::endl;
    if (!ok) ++g_failures;
}

FacetComplex complex_of(int n, const std::vector<VertexSet>& facets) {
    return FacetComplex{n, 4, facets};
}

struct PipelineState {
    std::map<int, std::vector<FacetComplex>> seeds;                 // n -> simplicial seeds
    std::map<int, Registry<std::vector<VertexSet>>> types;          // n -> all combinatorial types
    std::map<int, Registry<RationalPolytope>> realized;             // k -> union of both runs
    std::map<std::string, Certificate> certificates;                // key hex -> certificate (n=8)
    std::map<std::string, std::string> stages;                      // key hex -> stage
    std::map<int, std::vector<SphereRecord>> classified;            // n -> records with status
};

PipelineState g_state;

bool run_seed_counts(std::string& detail) {
    const std::map<int, size_t> expected{{5, 1}, {6, 2}, {7, 5}, {8, 39}};
    for (auto [n, want] : expected) {
        g_state.seeds[n] = enumerate_simplicial(n);
        if (g_state.seeds[n].size() != want) {
            detail = "n=" + std::to_string(n) + ": got " +
                     std::to_string(g_state.seeds[n].size()) + ", expected " + std::to_string(want);
            return false;
        }
        // bundled seed files carry the same combinatorial types
        auto bundled = ingest_seeds(g_data_dir + "/simplicial_spheres_n" + std::to_string(n) + ".txt");
        std::set<std::string> ours, theirs;
        for (const auto& s : g_state.seeds[n]) ours.insert(canonical_key(s).hex());
        for (const auto& s : bundled.seeds) theirs.insert(canonical_key(s).hex());
        if (ours != theirs) {
            detail = "n=" + std::to_string(n) + ": bundled seed file disagrees";
            return false;
        }
    }
    detail = "1, 2, 5, 39 simplicial spheres for n = 5..8; bundled files agree";
    return true;
}

bool run_sphere_counts(std::string& detail) {
    const std::map<int, size_t> expected{{5, 1}, {6, 4}, {7, 31}, {8, 1336}};
    for (auto [n, want] : expected) {
        auto result = enumerate_spheres(g_state.seeds[n]);
        if (result.types.size() != want) {
            detail = "n=" + std::to_string(n) + ": got " + std::to_string(result.types.size()) +
                     ", expected " + std::to_string(want);
            return false;
        }
        g_state.types[n] = std::move(result.types);
    }
    detail = "1, 4, 31, 1336 combinatorial types for n = 5..8";
    return true;
}

bool run_realization_counts(std::string& detail) {
    const std::map<int, size_t> expected{{6, 4}, {7, 31}, {8, 1294}};
    std::map<int, Registry<RationalPolytope>> byrule[2];
    for (int r = 0; r < 2; ++r) {
        GenerateOptions opts;
        opts.rule = r == 0 ? PointRule::Barycenter : PointRule::Simple;
        std::vector<RationalPolytope> seeds{standard_simplex()};
        for (int k = 6; k <= 8; ++k) {
            auto reg = generate_polytopes(seeds, k, opts);
            seeds.clear();
            for (const auto& [key, p] : reg.entries()) seeds.push_back(p);
            std::sort(seeds.begin(), seeds.end(),
                      [](const RationalPolytope& a, const RationalPolytope& b) {
                          return a.key < b.key;
                      });
            byrule[r][k] = std::move(reg);
        }
    }
    auto simpler = [](const RationalPolytope& a, const RationalPolytope& b) {
        return a.simplicity_score() < b.simplicity_score();
    };
    std::ostringstream counts;
    for (auto [k, want] : expected) {
        Registry<RationalPolytope> merged = std::move(byrule[0][k]);
        merged.merge_from(std::move(byrule[1][k]), simpler);
        if (merged.size() != want) {
            detail = "k=" + std::to_string(k) + ": got " + std::to_string(merged.size()) +
                     ", expected " + std::to_string(want);
            return false;
        }
        counts << (k > 6 ? ", " : "") << merged.size();
        g_state.realized[k] = std::move(merged);
    }
    detail = counts.str() + " polytope types at k = 6, 7, 8 under both point rules";
    return true;
}

bool run_certification(std::string& detail) {
    const auto& types = g_state.types[8];
    const auto& realized = g_state.realized[8];
    int certified = 0;
    for (const auto& [key, facets] : types.entries()) {
        auto c = complex_of(8, facets);
        auto result = classify(c);
        bool is_certified = result.status == ClassifyResult::Status::CertifiedNonRealizable;
        bool is_realized = realized.contains(key);
        if (is_certified && is_realized) {
            detail = "sphere " + key.hex() + " both realized and certified";
            return false;
        }
        if (!is_certified && !is_realized) {
            detail = "sphere " + key.hex() + " neither realized nor certified";
            return false;
        }
        if (is_certified) {
            ++certified;
            std::string diag;
            if (!verify_certificate(*result.certificate, c, &diag)) {
                detail = "certificate fails verification: " + diag;
                return false;
            }
            g_state.certificates.emplace(key.hex(), *result.certificate);
            g_state.stages.emplace(key.hex(), result.stage);
        }
    }
    if (certified != 42) {
        detail = "certified " + std::to_string(certified) + ", expected 42";
        return false;
    }
    // every realization must verify, and its coordinate chirotope must
    // extend the incidence-derived partial chirotope up to a global sign
    for (const auto& [key, poly] : realized.entries()) {
        std::string diag;
        if (!verify_realization(poly.incidence_complex(), poly.vertices, &diag)) {
            detail = "realization " + key.hex() + " fails verification: " + diag;
            return false;
        }
        auto derived = derive_partial_chirotope(poly.incidence_complex());
        if (derived.conflict) {
            detail = "realized sphere has a rule conflict";
            return false;
        }
        auto coord_chi = chirotope_of_points(poly.vertices);
        int agree = 0, disagree = 0;
        for (int t = 0; t < derived.chi.tuple_count(); ++t) {
            if (!derived.chi.known(t)) continue;
            int a = derived.chi.value(t), b = coord_chi.value(t);
            if (a == 0 || b == 0) {
                if (a != b) {
                    detail = "zero pattern of the derived chirotope breaks on " + key.hex();
                    return false;
                }
                continue;
            }
            (a == b ? agree : disagree)++;
        }
        if (agree && disagree) {
            detail = "derived chirotope not a global-sign restriction of coordinates on " +
                     key.hex();
            return false;
        }
    }
    detail = "42 certified, 1294 realized, disjoint cover of all 1336; all witnesses verify";
    return true;
}

const std::map<int, std::map<int, std::array<int, 4>>> kFacetTable{
    {5, {{5, {1, 1, 0, 1}}}},
    {6, {{6, {1, 1, 0, 1}}, {7, {1, 1, 0, 1}}, {8, {1, 1, 0, 1}}, {9, {1, 1, 0, 1}}}},
    {7,
     {{6, {1, 1, 0, 1}},
      {7, {3, 3, 0, 2}},
      {8, {5, 5, 0, 2}},
      {9, {7, 7, 0, 2}},
      {10, {6, 6, 0, 2}},
      {11, {4, 4, 0, 2}},
      {12, {3, 3, 0, 2}},
      {13, {1, 1, 0, 1}},
      {14, {1, 1, 0, 1}}}},
    {8,
     {{6, {1, 1, 0, 1}},
      {7, {5, 5, 0, 2}},
      {8, {27, 27, 0, 3}},
      {9, {76, 76, 0, 4}},
      {10, {138, 137, 1, 4}},
      {11, {209, 205, 4, 3}},
      {12, {231, 225, 6, 4}},
      {13, {226, 218, 8, 3}},
      {14, {173, 166, 7, 4}},
      {15, {122, 117, 5, 3}},
      {16, {70, 65, 5, 3}},
      {17, {33, 31, 2, 2}},
      {18, {16, 14, 2, 2}},
      {19, {5, 4, 1, 1}},
      {20, {4, 3, 1, 1}}}},
};

bool run_tables(std::string& detail) {
    // classified records for every n
    for (int n = 5; n <= 8; ++n) {
        std::vector<SphereRecord> recs;
        for (const auto& [key, facets] : g_state.types[n].entries()) {
            auto rec = SphereRecord::from_complex(complex_of(n, facets));
            bool realized = n == 5 ? true : g_state.realized[n].contains(key);
            if (n <= 7 && !realized) {
                detail = "n=" + std::to_string(n) + " sphere unexpectedly unrealized";
                return false;
            }
            rec.status = realized ? SphereStatus::PolytopeRealized
                                  : SphereStatus::CertifiedNonRealizable;
            if (!realized && n == 8 && !g_state.certificates.count(key.hex())) {
                detail = "missing certificate for " + key.hex();
                return false;
            }
            recs.push_back(std::move(rec));
        }
        g_state.classified[n] = std::move(recs);
    }

    // facet-count rows, all of them, against the published table
    for (const auto& [n, rows] : kFacetTable) {
        auto table = build_report(g_state.classified[n], GroupBy::Facets);
        std::map<std::string, ReportRow> by_group;
        for (const auto& row : table.rows) by_group[row.group] = row;
        if (by_group.size() != rows.size()) {
            detail = "n=" + std::to_string(n) + ": " + std::to_string(by_group.size()) +
                     " facet-count groups, expected " + std::to_string(rows.size());
            return false;
        }
        for (const auto& [fc, want] : rows) {
            std::string group = "(" + std::to_string(n) + ",*,*," + std::to_string(fc) + ")";
            auto it = by_group.find(group);
            if (it == by_group.end()) {
                detail = "missing row " + group;
                return false;
            }
            const auto& got = it->second;
            if (got.spheres != want[0] || got.polytopes != want[1] ||
                got.nonrealizable != want[2] || got.fvectors != want[3]) {
                detail = "row " + group + " is " + std::to_string(got.spheres) + "/" +
                         std::to_string(got.polytopes) + "/" + std::to_string(got.nonrealizable) +
                         "/" + std::to_string(got.fvectors) + ", expected " +
                         std::to_string(want[0]) + "/" + std::to_string(want[1]) + "/" +
                         std::to_string(want[2]) + "/" + std::to_string(want[3]);
                return false;
            }
        }
    }

    // f-vector spot rows
    {
        auto table = build_report(g_state.classified[8], GroupBy::FVector);
        std::map<std::string, ReportRow> by_group;
        for (const auto& row : table.rows) by_group[row.group] = row;
        struct Spot {
            const char* group;
            int s, p, c;
        };
        for (const Spot& spot : {Spot{"(8,19,19,8)", 13, 13, 0}, Spot{"(8,28,40,20)", 4, 3, 1}}) {
            auto it = by_group.find(spot.group);
            if (it == by_group.end() || it->second.spheres != spot.s ||
                it->second.polytopes != spot.p || it->second.nonrealizable != spot.c) {
                detail = std::string("f-vector row ") + spot.group + " mismatch";
                return false;
            }
        }
        int distinct = static_cast<int>(table.rows.size());
        if (distinct != 40) {
            detail = "n=8 has " + std::to_string(distinct) + " f-vectors, expected 40";
            return false;
        }
    }

    // flag f-vector spot rows
    {
        auto table = build_report(g_state.classified[8], GroupBy::FlagFVector);
        std::map<std::string, ReportRow> by_group;
        for (const auto& row : table.rows) by_group[row.group] = row;
        struct Spot {
            const char* group;
            int s, p, c;
        };
        for (const Spot& spot :
             {Spot{"(8,22,24,10;46)", 2, 1, 1}, Spot{"(8,28,40,20;80)", 4, 3, 1}}) {
            auto it = by_group.find(spot.group);
            if (it == by_group.end() || it->second.spheres != spot.s ||
                it->second.polytopes != spot.p || it->second.nonrealizable != spot.c) {
                detail = std::string("flag row ") + spot.group + " mismatch";
                return false;
            }
        }
    }
    detail = "facet rows for n <= 8 plus f-vector and flag spot rows match";
    return true;
}

bool run_table2_spheres(std::string& detail) {
    auto recs = read_sphere_file(g_data_dir + "/nonpolytopal_9vertex_spheres.txt");
    if (recs.size() != 5) {
        detail = "expected the five bundled spheres";
        return false;
    }
    const std::vector<std::string> flags{"(9,25,26,10;50)", "(9,27,29,11;53)", "(9,27,29,11;53)",
                                         "(9,27,30,12;57)", "(9,27,30,12;57)"};
    for (size_t i = 0; i < recs.size(); ++i) {
        auto c = recs[i].complex();
        auto validity = check_sphere(c);
        if (!validity.valid) {
            detail = "sphere " + std::to_string(i + 1) + " fails " + validity.failed_check;
            return false;
        }
        auto lat = build_face_poset(c);
        if (flag_f_vector(lat).str() != flags[i]) {
            detail = "sphere " + std::to_string(i + 1) + " flag vector " +
                     flag_f_vector(lat).str() + ", expected " + flags[i];
            return false;
        }
        auto result = classify(c);
        if (result.status != ClassifyResult::Status::CertifiedNonRealizable) {
            detail = "sphere " + std::to_string(i + 1) + " not certified";
            return false;
        }
        std::string diag;
        if (!verify_certificate(*result.certificate, c, &diag)) {
            detail = "sphere " + std::to_string(i + 1) + " certificate: " + diag;
            return false;
        }
    }
    detail = "all five parse, validate, match their flag f-vectors, certified non-realizable";
    return true;
}

bool run_properties(std::string& detail) {
    std::mt19937 rng(20240917);

    // Euler relation on every enumerated sphere
    for (int n = 5; n <= 8; ++n)
        for (const auto& [key, facets] : g_state.types[n].entries()) {
            auto fv = f_vector(build_face_poset(complex_of(n, facets))).f;
            if (fv[0] - fv[1] + fv[2] - fv[3] != 0) {
                detail = "Euler relation fails at n=" + std::to_string(n);
                return false;
            }
        }

    // canonical key relabeling invariance, 10^4 trials over random spheres
    {
        std::vector<std::pair<int, std::vector<VertexSet>>> pool;
        for (int n = 5; n <= 8; ++n)
            for (const auto& [key, facets] : g_state.types[n].entries())
                pool.emplace_back(n, facets);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            const auto& [n, facets] = pool[pick(rng)];
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i + 1;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<VertexSet> relabeled;
            for (VertexSet f : facets) {
                VertexSet g = 0;
                for (int v : set_elements(f)) g = set_with(g, perm[v - 1]);
                relabeled.push_back(g);
            }
            std::sort(relabeled.begin(), relabeled.end());
            if (canonical_key(complex_of(n, relabeled)) != canonical_key(complex_of(n, facets))) {
                detail = "relabeling changed a canonical key";
                return false;
            }
        }
    }

    // brute-force non-isomorphism on a random sample of 8-vertex pairs
    {
        std::vector<std::vector<VertexSet>> eights;
        for (const auto& [key, facets] : g_state.types[8].entries()) eights.push_back(facets);
        std::uniform_int_distribution<size_t> pick(0, eights.size() - 1);
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
        for (int pair = 0; pair < 100; ++pair) {
            size_t a = pick(rng), b = pick(rng);
            if (a == b) {
                --pair;
                continue;
            }
            std::set<std::vector<VertexSet>> images;
            std::sort(perm.begin(), perm.end());
            bool isomorphic = false;
            do {
                std::vector<VertexSet> mapped;
                for (VertexSet f : eights[a]) {
                    VertexSet g = 0;
                    for (int v : set_elements(f)) g = set_with(g, perm[v - 1]);
                    mapped.push_back(g);
                }
                std::sort(mapped.begin(), mapped.end());
                if (mapped == eights[b]) {
                    isomorphic = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (isomorphic) {
                detail = "two registry members are isomorphic";
                return false;
            }
        }
    }

    // chirotope alternating + order independence on all 8-vertex spheres
    {
        std::vector<int> vs{1, 2, 3, 4, 5, 6, 7, 8};
        for (const auto& [key, facets] : g_state.types[8].entries()) {
            auto c = complex_of(8, facets);
            auto fwd = derive_partial_chirotope(c, IterationOrder::Forward);
            auto rev = derive_partial_chirotope(c, IterationOrder::Reverse);
            if (fwd.conflict.has_value() != rev.conflict.has_value()) {
                detail = "order changes the conflict outcome";
                return false;
            }
            if (fwd.conflict) continue;
            int agree = 0, disagree = 0;
            for (int t = 0; t < fwd.chi.tuple_count(); ++t) {
                if (fwd.chi.known(t) != rev.chi.known(t)) {
                    detail = "order changes the derived domain";
                    return false;
                }
                if (!fwd.chi.known(t)) continue;
                int x = fwd.chi.value(t), y = rev.chi.value(t);
                if (std::abs(x) != std::abs(y)) {
                    detail = "order changes a zero pattern";
                    return false;
                }
                if (x != 0) (x == y ? agree : disagree)++;
            }
            if (agree && disagree) {
                detail = "order changes values beyond a global sign";
                return false;
            }
            // alternating access on a few random tuples
            for (int t = 0; t < 5; ++t) {
                std::shuffle(vs.begin(), vs.end(), rng);
                std::array<int, 5> tup{vs[0], vs[1], vs[2], vs[3], vs[4]};
                auto base = fwd.chi.sign_ordered(tup);
                std::array<int, 5> swapped = tup;
                std::swap(swapped[0], swapped[4]);
                auto flipped = fwd.chi.sign_ordered(swapped);
                if (base.has_value() != flipped.has_value() ||
                    (base && *base != -*flipped)) {
                    detail = "alternating access violated";
                    return false;
                }
            }
        }
    }

    // arrangement partition probes: 10^3 random points per arrangement
    {
        std::vector<RationalPolytope> probes{standard_simplex()};
        for (const auto& [key, p] : g_state.realized[6].entries()) {
            probes.push_back(p);
            break;
        }
        for (const auto& poly : probes) {
            std::vector<std::vector<BigInt>> hs;
            for (const auto& f : poly.facets) hs.push_back(f.h);
            std::vector<std::vector<BigInt>> norm;
            for (auto h : hs) {
                make_primitive(h);
                norm.push_back(h);
            }
            auto box = bounding_cuboid(hs);
            auto faces = arrangement_faces(hs, box);
            std::uniform_int_distribution<long> num(0, 972);
            for (int trial = 0; trial < 1000; ++trial) {
                QVec p(4);
                for (int c = 0; c < 4; ++c) {
                    Rational t(num(rng), 973);
                    p[c] = box.lo[c] + t * (box.hi[c] - box.lo[c]);
                }
                int matches = 0;
                for (const auto& face : faces) {
                    bool ok = true;
                    for (size_t i = 0; i < norm.size() && ok; ++i) {
                        Rational val(norm[i][0]);
                        for (int c = 0; c < 4; ++c) val += Rational(norm[i][c + 1]) * p[c];
                        if (val.sgn() != face.sign[i]) ok = false;
                    }
                    matches += ok;
                }
                if (matches != 1) {
                    detail = "probe point matched " + std::to_string(matches) + " faces";
                    return false;
                }
            }
        }
    }

    // hull vs brute force on 10^3 random instances
    {
        std::uniform_int_distribution<int> numd(-6, 6), dend(1, 4), md(5, 8);
        int done = 0;
        while (done < 1000) {
            int m = md(rng);
            std::vector<QVec> pts;
            for (int i = 0; i < m; ++i) {
                QVec p;
                for (int c = 0; c < 4; ++c) p.emplace_back(numd(rng), dend(rng));
                pts.push_back(std::move(p));
            }
            RationalPolytope poly;
            try {
                poly = convex_hull(pts);
            } catch (const DegeneracyError&) {
                continue;
            }
            ++done;
            auto oracle = polyenum::testing::brute_facets(pts);
            if (poly.facets.size() != oracle.size()) {
                detail = "hull facet count disagrees with brute force";
                return false;
            }
            std::set<std::vector<BigInt>> mine;
            for (const auto& f : poly.facets) mine.insert(f.h);
            for (const auto& [h, on] : oracle)
                if (!mine.count(h)) {
                    detail = "hull misses a brute-force facet";
                    return false;
                }
        }
    }

    if (lp_selfcheck_count() == 0) {
        detail = "no LP solves were self-checked";
        return false;
    }
    detail = "all property suites hold; " + std::to_string(lp_selfcheck_count()) +
             " LP witnesses re-checked";
    return true;
}

bool run_nine_vertex_support(std::string& detail) {
    // ingest a 9-vertex simplicial census sample (the cyclic sphere C(9,4))
    std::vector<VertexSet> facets;
    for (VertexSet s = 0; s < (1u << 9); ++s) {
        if (set_size(s) != 4) continue;
        bool ok = true;
        for (int i = 1; i <= 9 && ok; ++i) {
            if (set_contains(s, i)) continue;
            for (int j = i + 1; j <= 9 && ok; ++j) {
                if (set_contains(s, j)) continue;
                int between = 0;
                for (int v = i + 1; v < j; ++v) between += set_contains(s, v);
                if (between % 2) ok = false;
            }
        }
        if (ok) facets.push_back(s);
    }
    auto cyclic = FacetComplex::make(9, facets, 4);
    std::string tmp = "/tmp/polyenum_accept_n9_seeds.txt";
    write_sphere_file(tmp, {SphereRecord::from_complex(cyclic)});
    auto ingested = ingest_seeds(tmp);
    std::remove(tmp.c_str());
    if (ingested.seeds.size() != 1 || ingested.seeds[0].n != 9) {
        detail = "9-vertex census ingestion failed";
        return false;
    }

    // one induction step to k = 9 from a small 8-vertex realization
    const RationalPolytope* small = nullptr;
    for (const auto& [key, p] : g_state.realized[8].entries())
        if (!small || p.facets.size() < small->facets.size()) small = &p;
    GenerateOptions opts;
    auto nine = generate_polytopes({*small}, 9, opts);
    if (nine.size() == 0) {
        detail = "no 9-vertex polytopes generated from the sample seed";
        return false;
    }
    int checked = 0;
    for (const auto& [key, p] : nine.entries()) {
        if (checked++ >= 3) break;
        std::string diag;
        if (!verify_realization(p.incidence_complex(), p.vertices, &diag)) {
            detail = "9-vertex realization fails verification: " + diag;
            return false;
        }
    }
    detail = "census ingestion and k=9 generation steps work; full runs: "
             "enumerate-spheres over the 1296-seed census, certify --stage all, "
             "realize --k 9 with both rules (multi-hundred-CPU-hour jobs; "
             "published totals 316014 / 274148 / 41866)";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--data") g_data_dir = argv[i + 1];
    set_lp_selfcheck(true);

    criterion(2, "simplicial seed oracle counts", run_seed_counts);
    criterion(1, "sphere enumeration counts", run_sphere_counts);
    criterion(3, "realization counts under both point rules", run_realization_counts);
    criterion(4, "certification completeness at n=8", run_certification);
    criterion(5, "table reproduction", run_tables);
    criterion(6, "explicit 9-vertex spheres", run_table2_spheres);
    criterion(7, "property suites", run_properties);
    criterion(8, "nine-vertex pipeline support", run_nine_vertex_support);

    if (g_failures) {
        std::cout << g_failures << " criteria FAILED" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
