// Command-line surface for the sphere/polytope classification pipeline:
// enumerate combinatorial 3-spheres, certify non-polytopality, generate
// rational realizations, merge and report.

#include "polyenum/chirotope.hpp"
#include "polyenum/geometry.hpp"
#include "polyenum/io.hpp"
#include "polyenum/sphere_enum.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

using namespace polyenum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

int worker_count(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("POLYENUM_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

std::vector<SphereRecord> records_of_types(const Registry<std::vector<VertexSet>>& types, int n) {
    std::vector<SphereRecord> recs;
    for (const auto& [key, facets] : types.entries())
        recs.push_back(SphereRecord::from_complex(FacetComplex{n, 4, facets}));
    std::sort(recs.begin(), recs.end(),
              [](const SphereRecord& a, const SphereRecord& b) { return a.key < b.key; });
    return recs;
}

int cmd_enumerate_simplicial(int n, const std::string& out) {
    auto seeds = enumerate_simplicial(n);
    std::vector<SphereRecord> recs;
    for (const auto& s : seeds) recs.push_back(SphereRecord::from_complex(s));
    write_sphere_file(out, recs);
    std::cout << "simplicial 3-spheres with " << n << " vertices: " << seeds.size() << "\n";
    return kExitOk;
}

int cmd_enumerate_spheres(const std::string& seeds_path, const std::string& out, int workers) {
    auto ingest = ingest_seeds(seeds_path);
    for (const auto& w : ingest.warnings) std::cerr << "warning: " << w << "\n";
    if (ingest.seeds.empty()) {
        std::cerr << "no seeds\n";
        return kExitInputError;
    }
    auto result = enumerate_spheres(ingest.seeds, workers);
    auto recs = records_of_types(result.types, ingest.seeds.front().n);
    write_sphere_file(out, recs);
    std::cout << "combinatorial types: " << result.types.size() << " (candidates checked "
              << result.candidates_checked << ", rejected " << result.non_types.size() << ")\n";
    return kExitOk;
}

int cmd_certify(const std::string& spheres_path, const std::string& out,
                const std::string& stage) {
    ClassifyOptions opts;
    if (stage == "gp")
        opts.max_stage = 1;
    else if (stage == "propagate")
        opts.max_stage = 2;
    else if (stage == "bfp" || stage == "all")
        opts.max_stage = 3;
    else {
        std::cerr << "unknown stage '" << stage << "'\n";
        return kExitInputError;
    }
    auto recs = read_sphere_file(spheres_path);
    std::vector<CertificateRecord> certs;
    std::map<std::string, int> by_stage;
    for (const auto& rec : recs) {
        auto result = classify(rec.complex(), opts);
        CertificateRecord cr;
        cr.key = rec.key;
        if (result.status == ClassifyResult::Status::CertifiedNonRealizable) {
            cr.certificate = result.certificate;
            cr.stage = result.stage;
            by_stage[result.stage]++;
        } else {
            by_stage["unresolved"]++;
        }
        certs.push_back(std::move(cr));
    }
    write_certificate_file(out, certs);
    for (const auto& [s, c] : by_stage) std::cout << s << ": " << c << "\n";
    return kExitOk;
}

int cmd_realize(int k, const std::string& rule_name, const std::string& out, int workers) {
    GenerateOptions opts;
    opts.workers = workers;
    if (rule_name == "barycenter")
        opts.rule = PointRule::Barycenter;
    else if (rule_name == "simple")
        opts.rule = PointRule::Simple;
    else {
        std::cerr << "unknown rule '" << rule_name << "'\n";
        return kExitInputError;
    }
    std::vector<RationalPolytope> seeds{standard_simplex()};
    for (int step = 6; step <= k; ++step) {
        auto reg = generate_polytopes(seeds, step, opts);
        seeds.clear();
        for (const auto& [key, p] : reg.entries()) seeds.push_back(p);
        std::sort(seeds.begin(), seeds.end(),
                  [](const RationalPolytope& a, const RationalPolytope& b) { return a.key < b.key; });
        std::cout << "k=" << step << ": " << seeds.size() << " combinatorial types\n";
    }
    write_realization_file(out, seeds);
    return kExitOk;
}

int cmd_classify(const std::string& spheres_path, const std::string& realizations_path,
                 const std::string& certs_path, const std::string& out) {
    auto all = read_sphere_file(spheres_path);
    // concatenated shard files are fine; duplicates collapse by key
    std::vector<SphereRecord> spheres;
    KeySet seen;
    for (auto& rec : all)
        if (seen.emplace(rec.key, 1).second) spheres.push_back(std::move(rec));
    KeySet realized, certified;
    if (!realizations_path.empty())
        for (const auto& r : read_realization_file(realizations_path)) {
            if (!seen.count(r.key)) {
                std::cerr << "realization key " << r.key.hex() << " matches no input sphere\n";
                return kExitInputError;
            }
            realized.emplace(r.key, 1);
        }
    if (!certs_path.empty())
        for (const auto& c : read_certificate_file(certs_path)) {
            if (!seen.count(c.key)) {
                std::cerr << "certificate key " << c.key.hex() << " matches no input sphere\n";
                return kExitInputError;
            }
            if (c.certificate) certified.emplace(c.key, 1);
        }
    for (auto& rec : spheres) {
        bool is_real = realized.count(rec.key) > 0;
        bool is_cert = certified.count(rec.key) > 0;
        if (is_real && is_cert) {
            std::cerr << "inconsistent inputs: sphere " << rec.key.hex()
                      << " is both realized and certified non-realizable\n";
            return kExitInputError;
        }
        rec.status = is_real   ? SphereStatus::PolytopeRealized
                     : is_cert ? SphereStatus::CertifiedNonRealizable
                               : SphereStatus::Unresolved;
        auto lat = build_face_poset(rec.complex());
        rec.f = f_vector(lat);
        rec.flag = flag_f_vector(lat);
    }
    write_sphere_file(out, spheres);
    int r = 0, c = 0, u = 0;
    for (const auto& rec : spheres) {
        r += rec.status == SphereStatus::PolytopeRealized;
        c += rec.status == SphereStatus::CertifiedNonRealizable;
        u += rec.status == SphereStatus::Unresolved;
    }
    std::cout << "spheres: " << spheres.size() << "  realized: " << r << "  certified: " << c
              << "  unresolved: " << u << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& realizations_path, const std::string& certs_path,
               const std::string& spheres_path) {
    int failures = 0;
    if (!realizations_path.empty()) {
        for (const auto& poly : read_realization_file(realizations_path)) {
            std::vector<VertexSet> fs;
            for (const auto& f : poly.facets) fs.push_back(f.incident);
            std::string diag;
            bool ok = verify_realization(FacetComplex::make(poly.n, fs), poly.vertices, &diag) &&
                      canonical_key(FacetComplex::make(poly.n, fs)) == poly.key;
            if (!ok) {
                std::cerr << "FAIL realization " << poly.key.hex() << ": " << diag << "\n";
                ++failures;
            }
        }
    }
    if (!certs_path.empty()) {
        if (spheres_path.empty()) {
            std::cerr << "--certs needs --spheres to resolve the facet lists\n";
            return kExitInputError;
        }
        std::map<std::string, FacetComplex> by_key;
        for (const auto& rec : read_sphere_file(spheres_path))
            by_key.emplace(rec.key.hex(), rec.complex());
        for (const auto& cert : read_certificate_file(certs_path)) {
            if (!cert.certificate) continue;
            auto it = by_key.find(cert.key.hex());
            if (it == by_key.end()) {
                std::cerr << "FAIL certificate " << cert.key.hex() << ": sphere not found\n";
                ++failures;
                continue;
            }
            std::string diag;
            if (!verify_certificate(*cert.certificate, it->second, &diag)) {
                std::cerr << "FAIL certificate " << cert.key.hex() << ": " << diag << "\n";
                ++failures;
            }
        }
    }
    std::cout << (failures ? "FAILED" : "ok") << "\n";
    return failures ? kExitVerifyFailed : kExitOk;
}

int cmd_report(const std::string& in, const std::string& by_name, bool machine) {
    GroupBy by;
    if (by_name == "facets")
        by = GroupBy::Facets;
    else if (by_name == "fvector")
        by = GroupBy::FVector;
    else if (by_name == "flagfvector")
        by = GroupBy::FlagFVector;
    else {
        std::cerr << "unknown grouping '" << by_name << "'\n";
        return kExitInputError;
    }
    auto recs = read_sphere_file(in);
    auto table = build_report(recs, by);
    std::cout << render_report_text(table);
    if (machine) std::cout << render_report_machine(table);
    return kExitOk;
}

int cmd_analyze_multipartite(const std::string& realizations_path) {
    auto polys = read_realization_file(realizations_path);
    std::vector<SphereRecord> recs;
    for (const auto& p : polys) {
        std::vector<VertexSet> fs;
        for (const auto& f : p.facets) fs.push_back(f.incident);
        auto rec = SphereRecord::from_complex(FacetComplex::make(p.n, fs), false);
        rec.status = SphereStatus::PolytopeRealized;
        recs.push_back(std::move(rec));
    }
    auto rows = analyze_multipartite(recs);
    for (const auto& row : rows) {
        std::cout << "K_{";
        for (size_t i = 0; i < row.parts.size(); ++i)
            std::cout << (i ? "," : "") << row.parts[i];
        bool counterexample = row.parts[0] >= 3;
        std::cout << "}: " << row.count << (counterexample ? "  (part of size >= 3)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_analyze_flag_gaps(const std::string& report_path) {
    auto recs = read_sphere_file(report_path);
    for (const auto& g : analyze_flag_gaps(recs))
        std::cout << "no polytope attains flag f-vector " << g << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and classification of combinatorial 3-spheres and 4-polytopes"};
    app.require_subcommand(1);

    int n = 8, k = 8, workers = 0;
    std::string in, out, seeds, spheres, realizations, certs, report_path;
    std::string stage = "all", rule = "barycenter", by = "facets";
    bool machine = false;

    auto* sc_simp = app.add_subcommand("enumerate-simplicial", "simplicial 3-sphere seeds, n <= 8");
    sc_simp->add_option("--n", n, "vertex count")->required();
    sc_simp->add_option("--out", out, "output sphere file")->required();

    auto* sc_enum = app.add_subcommand("enumerate-spheres", "all combinatorial types from seeds");
    sc_enum->add_option("--seeds", seeds, "seed sphere file")->required();
    sc_enum->add_option("--out", out, "output sphere file")->required();
    sc_enum->add_option("--workers", workers, "worker threads");

    auto* sc_cert = app.add_subcommand("certify", "non-polytopality certificates");
    sc_cert->add_option("--spheres", spheres, "sphere file")->required();
    sc_cert->add_option("--out", out, "certificate file")->required();
    sc_cert->add_option("--stage", stage, "gp|propagate|bfp|all");

    auto* sc_real = app.add_subcommand("realize", "inductive rational realizations");
    std::string start = "simplex";
    sc_real->add_option("--start", start, "only 'simplex' is supported");
    sc_real->add_option("--k", k, "target vertex count")->required();
    sc_real->add_option("--rule", rule, "barycenter|simple");
    sc_real->add_option("--out", out, "realization file")->required();
    sc_real->add_option("--workers", workers, "worker threads");

    auto* sc_class = app.add_subcommand("classify", "merge statuses into a report file");
    sc_class->add_option("--spheres", spheres, "sphere file")->required();
    sc_class->add_option("--realizations", realizations, "realization file");
    sc_class->add_option("--certs", certs, "certificate file");
    sc_class->add_option("--out", out, "classified sphere file")->required();

    auto* sc_verify = app.add_subcommand("verify", "re-check realizations and certificates");
    sc_verify->add_option("--realizations", realizations, "realization file");
    sc_verify->add_option("--certs", certs, "certificate file");
    sc_verify->add_option("--spheres", spheres, "sphere file (needed with --certs)");

    auto* sc_report = app.add_subcommand("report", "grouped classification table");
    sc_report->add_option("--in", in, "classified sphere file")->required();
    sc_report->add_option("--by", by, "facets|fvector|flagfvector");
    sc_report->add_flag("--machine", machine, "also print machine-readable rows");

    auto* sc_analyze = app.add_subcommand("analyze", "application analyses");
    auto* sc_multi = sc_analyze->add_subcommand("multipartite", "complete multipartite graphs");
    sc_multi->add_option("--realizations", realizations, "realization file")->required();
    auto* sc_gaps = sc_analyze->add_subcommand("flag-gaps", "sphere-only flag f-vectors");
    sc_gaps->add_option("--report", report_path, "classified sphere file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_simp) return cmd_enumerate_simplicial(n, out);
        if (*sc_enum) return cmd_enumerate_spheres(seeds, out, worker_count(workers));
        if (*sc_cert) return cmd_certify(spheres, out, stage);
        if (*sc_real) {
            if (start != "simplex") {
                std::cerr << "only --start simplex is supported\n";
                return kExitInputError;
            }
            return cmd_realize(k, rule, out, worker_count(workers));
        }
        if (*sc_class) return cmd_classify(spheres, realizations, certs, out);
        if (*sc_verify) return cmd_verify(realizations, certs, spheres);
        if (*sc_report) return cmd_report(in, by, machine);
        if (*sc_analyze) {
            if (*sc_multi) return cmd_analyze_multipartite(realizations);
            if (*sc_gaps) return cmd_analyze_flag_gaps(report_path);
            std::cerr << "analyze needs a subcommand\n";
            return kExitInputError;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
