#include "polyenum/chirotope.hpp"
#include "polyenum/geometry.hpp"
#include "polyenum/io.hpp"
#include "polyenum/sphere_enum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polyenum;

namespace {

FacetComplex complex_from_lists(int n, const std::vector<std::vector<int>>& facets, int d) {
    std::vector<VertexSet> fs;
    for (const auto& f : facets) fs.push_back(set_of(f));
    return FacetComplex::make(n, fs, d);
}

std::vector<std::vector<int>> facets_as_lists(const std::vector<VertexSet>& facets) {
    std::vector<std::vector<int>> out;
    for (VertexSet f : facets) out.push_back(set_elements(f));
    return out;
}

std::vector<QVec> points_from_strings(const std::vector<std::vector<std::string>>& pts) {
    std::vector<QVec> out;
    for (const auto& p : pts) {
        QVec q;
        for (const auto& c : p) q.push_back(Rational::parse(c));
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact enumeration and classification of combinatorial 3-spheres and 4-polytopes";

    py::class_<FVector>(m, "FVector").def("__str__", &FVector::str).def_readonly("f", &FVector::f);
    py::class_<FlagFVector>(m, "FlagFVector")
        .def("__str__", &FlagFVector::str)
        .def_readonly("f", &FlagFVector::f)
        .def_readonly("f02", &FlagFVector::f02);

    m.def(
        "sphere_checks",
        [](int n, const std::vector<std::vector<int>>& facets, int d) {
            auto c = complex_from_lists(n, facets, d);
            auto v = check_sphere(c);
            py::dict out;
            out["valid"] = v.valid;
            out["failed_check"] = v.failed_check;
            if (v.valid) {
                auto lat = build_face_poset(c);
                out["f_vector"] = f_vector(lat).str();
                out["flag_f_vector"] = flag_f_vector(lat).str();
            }
            return out;
        },
        py::arg("n"), py::arg("facets"), py::arg("d") = 4,
        "runs the validity checks; adds the (flag) f-vector when valid");

    m.def(
        "canonical_key_hex",
        [](int n, const std::vector<std::vector<int>>& facets) {
            return canonical_key(complex_from_lists(n, facets, 4)).hex();
        },
        py::arg("n"), py::arg("facets"),
        "relabeling-invariant key of the vertex-facet incidences");

    m.def(
        "enumerate_simplicial",
        [](int n) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& s : enumerate_simplicial(n)) out.push_back(facets_as_lists(s.facets));
            return out;
        },
        py::arg("n"), "all simplicial 3-spheres with n <= 8 vertices, up to isomorphism");

    m.def(
        "enumerate_spheres",
        [](int n, const std::vector<std::vector<std::vector<int>>>& seed_facets, int workers) {
            std::vector<FacetComplex> seeds;
            for (const auto& s : seed_facets) seeds.push_back(complex_from_lists(n, s, 4));
            auto res = enumerate_spheres(seeds, workers);
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& [key, facets] : res.types.entries())
                out.push_back(facets_as_lists(facets));
            return out;
        },
        py::arg("n"), py::arg("seeds"), py::arg("workers") = 1,
        "repeated untriangulation from simplicial seeds");

    m.def(
        "classify_sphere",
        [](int n, const std::vector<std::vector<int>>& facets) {
            auto c = complex_from_lists(n, facets, 4);
            auto r = classify(c);
            py::dict out;
            bool certified = r.status == ClassifyResult::Status::CertifiedNonRealizable;
            out["certified_nonrealizable"] = certified;
            out["stage"] = r.stage;
            if (certified) {
                std::string diag;
                out["certificate_kind"] = certificate_kind(*r.certificate);
                out["certificate_verifies"] = verify_certificate(*r.certificate, c, &diag);
            }
            return out;
        },
        py::arg("n"), py::arg("facets"),
        "runs the non-polytopality pipeline on one sphere");

    m.def(
        "convex_hull",
        [](const std::vector<std::vector<std::string>>& pts) {
            auto poly = convex_hull(points_from_strings(pts));
            py::dict out;
            out["n"] = poly.n;
            out["key"] = poly.key.hex();
            out["facets"] = facets_as_lists([&] {
                std::vector<VertexSet> fs;
                for (const auto& f : poly.facets) fs.push_back(f.incident);
                return fs;
            }());
            std::vector<std::vector<std::string>> coords;
            for (const auto& v : poly.vertices) {
                std::vector<std::string> row;
                for (const auto& c : v) row.push_back(c.str());
                coords.push_back(std::move(row));
            }
            out["vertices"] = coords;
            return out;
        },
        py::arg("points"),
        "exact hull of rational points in Q^4; coordinates are 'p/q' strings");

    m.def(
        "verify_realization",
        [](int n, const std::vector<std::vector<int>>& facets,
           const std::vector<std::vector<std::string>>& pts) {
            return verify_realization(complex_from_lists(n, facets, 4), points_from_strings(pts));
        },
        py::arg("n"), py::arg("facets"), py::arg("points"));

    m.def(
        "generate_polytopes",
        [](int k, const std::string& rule, int workers) {
            GenerateOptions opts;
            opts.workers = workers;
            opts.rule = rule == "simple" ? PointRule::Simple : PointRule::Barycenter;
            std::vector<RationalPolytope> seeds{standard_simplex()};
            std::vector<int> counts;
            for (int step = 6; step <= k; ++step) {
                auto reg = generate_polytopes(seeds, step, opts);
                seeds.clear();
                for (const auto& [key, p] : reg.entries()) seeds.push_back(p);
                std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) {
                    return a.key < b.key;
                });
                counts.push_back(static_cast<int>(seeds.size()));
            }
            return counts;
        },
        py::arg("k"), py::arg("rule") = "barycenter", py::arg("workers") = 1,
        "inductive generation from the standard simplex; returns counts for 6..k");

    m.def(
        "parse_sphere",
        [](const std::string& line) {
            auto rec = parse_sphere_line(line, 1);
            py::dict out;
            out["n"] = rec.n;
            out["facets"] = facets_as_lists(rec.facets);
            out["key"] = rec.key.hex();
            return out;
        },
        py::arg("line"), "parses a sphere interchange line (general or compact form)");
}
