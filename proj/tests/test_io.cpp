#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/io.hpp"

#include "polyenum/sphere_enum.hpp"

using namespace polyenum;

namespace {

const char* kTable2Line1 = "[12345,12469,12578,12678,13468,1358,23459,25679,346789,35789]";

FacetComplex octahedron() {
    return FacetComplex::make(6,
                              {set_of({1, 2, 5}), set_of({2, 3, 5}), set_of({3, 4, 5}),
                               set_of({1, 4, 5}), set_of({1, 2, 6}), set_of({2, 3, 6}),
                               set_of({3, 4, 6}), set_of({1, 4, 6})},
                              3);
}

}  // namespace

TEST_CASE("compact sphere line parses to the 10-facet, 9-vertex sphere") {
    auto rec = parse_sphere_line(kTable2Line1, 1);
    CHECK(rec.n == 9);
    CHECK(rec.facets.size() == 10);
    CHECK(std::count(rec.facets.begin(), rec.facets.end(), set_of({3, 4, 6, 7, 8, 9})) == 1);
}

TEST_CASE("general emit/parse round trip is lossless") {
    auto rec = parse_sphere_line(kTable2Line1, 1);
    rec.status = SphereStatus::CertifiedNonRealizable;
    auto lat = build_face_poset(rec.complex());
    rec.f = f_vector(lat);
    rec.flag = flag_f_vector(lat);
    std::string line = emit_sphere_line(rec);
    auto back = parse_sphere_line(line, 1);
    CHECK(back.n == rec.n);
    CHECK(back.facets == rec.facets);
    CHECK(back.key == rec.key);
    CHECK(back.status == rec.status);
    // the embedded compact field matches the compact emitter
    auto compact_pos = line.find("compact=");
    REQUIRE(compact_pos != std::string::npos);
    auto compact = line.substr(compact_pos + 8);
    auto reparsed = parse_sphere_line(compact, 1);
    CHECK(reparsed.key == rec.key);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_sphere_line("[1123,1234]", 3), ParseError);
    CHECK_THROWS_AS(parse_sphere_line("[12a]", 1), ParseError);
    CHECK_THROWS_AS(parse_sphere_line("sphere n=4 facets=1,2,3,9", 1), ParseError);
    CHECK_THROWS_AS(parse_sphere_line("[1234,123]", 1), ParseError);  // containment
    try {
        parse_sphere_line("[1123]", 7);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.offset > 0);
    }
}

TEST_CASE("realization lines round trip") {
    RationalPolytope poly;
    poly.n = 5;
    poly.vertices = {QVec{Rational(0), Rational(0), Rational(0), Rational(0)},
                     QVec{Rational(1), Rational(0), Rational(0), Rational(0)},
                     QVec{Rational(0), Rational(1), Rational(0), Rational(0)},
                     QVec{Rational(0), Rational(0), Rational(1), Rational(0)},
                     QVec{Rational(1, 2), Rational(1, 3), Rational(0), Rational(7)}};
    RationalPolytope::Facet f;
    f.h = {BigInt(-1), BigInt(1), BigInt(1), BigInt(1), BigInt(1)};
    f.incident = set_of({1, 2, 3, 4});
    poly.facets.push_back(f);
    poly.key = CanonicalKey::from_bytes("test");
    auto line = emit_realization_line(poly);
    auto back = parse_realization_line(line, 1);
    CHECK(back.n == poly.n);
    CHECK(back.vertices == poly.vertices);
    CHECK(back.facets.size() == 1);
    CHECK(back.facets[0].h == f.h);
    CHECK(back.facets[0].incident == f.incident);
    CHECK(back.key == poly.key);
}

TEST_CASE("certificate lines round trip through parse") {
    auto rec = parse_sphere_line(kTable2Line1, 1);
    auto result = classify(rec.complex());
    REQUIRE(result.certificate.has_value());
    CertificateRecord cr{rec.key, result.certificate, result.stage};
    auto line = emit_certificate_line(cr);
    auto back = parse_certificate_line(line, 1);
    CHECK(back.key == rec.key);
    REQUIRE(back.certificate.has_value());
    CHECK(certificate_kind(*back.certificate) == certificate_kind(*result.certificate));
    CHECK(back.stage == result.stage);
    // the parsed certificate still verifies
    CHECK(verify_certificate(*back.certificate, rec.complex(), nullptr));

    CertificateRecord unres{rec.key, std::nullopt, ""};
    auto uline = emit_certificate_line(unres);
    auto uback = parse_certificate_line(uline, 2);
    CHECK(uback.key == rec.key);
    CHECK_FALSE(uback.certificate.has_value());
}

TEST_CASE("report conservation per group") {
    auto types = enumerate_spheres(enumerate_simplicial(6)).types;
    std::vector<SphereRecord> recs;
    int toggle = 0;
    for (const auto& [key, facets] : types.entries()) {
        auto rec = SphereRecord::from_complex(FacetComplex{6, 4, facets});
        rec.status = (toggle++ % 2) ? SphereStatus::PolytopeRealized
                                    : SphereStatus::CertifiedNonRealizable;
        recs.push_back(std::move(rec));
    }
    for (auto by : {GroupBy::Facets, GroupBy::FVector, GroupBy::FlagFVector}) {
        auto table = build_report(recs, by);
        int spheres = 0;
        for (const auto& row : table.rows) {
            CHECK(row.spheres == row.polytopes + row.nonrealizable);
            spheres += row.spheres;
        }
        CHECK(spheres == 4);
        CHECK_FALSE(render_report_text(table).empty());
        CHECK_FALSE(render_report_machine(table).empty());
    }
}

TEST_CASE("octahedron graph is complete tripartite, C5 is not multipartite") {
    auto lat = build_face_poset(octahedron());
    auto parts = complete_multipartite_parts(vertex_edge_graph(lat));
    REQUIRE(parts.has_value());
    CHECK(*parts == std::vector<int>{2, 2, 2});

    VertexGraph c5;
    c5.n = 5;
    c5.adj.assign(5, 0);
    for (int i = 0; i < 5; ++i) {
        int u = i + 1, v = (i + 1) % 5 + 1;
        c5.adj[u - 1] = set_with(c5.adj[u - 1], v);
        c5.adj[v - 1] = set_with(c5.adj[v - 1], u);
    }
    CHECK_FALSE(complete_multipartite_parts(c5).has_value());

    // complete graph: all parts singletons
    auto simplex_facets = std::vector<VertexSet>{};
    for (int skip = 1; skip <= 5; ++skip) simplex_facets.push_back(full_set(5) & ~single(skip));
    auto klat = build_face_poset(FacetComplex::make(5, simplex_facets, 4));
    auto kparts = complete_multipartite_parts(vertex_edge_graph(klat));
    REQUIRE(kparts.has_value());
    CHECK(*kparts == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("flag-gap analysis spots sphere-only flag vectors") {
    std::vector<SphereRecord> recs;
    auto rec = parse_sphere_line(kTable2Line1, 1);
    rec.status = SphereStatus::CertifiedNonRealizable;
    recs.push_back(rec);
    auto gaps = analyze_flag_gaps(recs);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0] == "(9,25,26,10;50)");
}
