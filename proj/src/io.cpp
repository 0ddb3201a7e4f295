#include "polyenum/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polyenum {

ParseError::ParseError(const std::string& msg, int line, int offset)
    : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(offset) + ": " + msg),
      line(line),
      offset(offset) {}

std::string status_str(SphereStatus s) {
    switch (s) {
        case SphereStatus::Sphere: return "sphere";
        case SphereStatus::PolytopeRealized: return "polytope-realized";
        case SphereStatus::CertifiedNonRealizable: return "certified-nonrealizable";
        case SphereStatus::Unresolved: return "unresolved";
    }
    return "sphere";
}

SphereStatus status_from(const std::string& s) {
    if (s == "sphere") return SphereStatus::Sphere;
    if (s == "polytope-realized") return SphereStatus::PolytopeRealized;
    if (s == "certified-nonrealizable") return SphereStatus::CertifiedNonRealizable;
    if (s == "unresolved") return SphereStatus::Unresolved;
    throw std::invalid_argument("unknown status '" + s + "'");
}

SphereRecord SphereRecord::from_complex(const FacetComplex& c, bool with_vectors) {
    SphereRecord rec;
    rec.n = c.n;
    rec.facets = c.facets;
    rec.key = canonical_key(c);
    if (with_vectors) {
        auto lat = build_face_poset(c);
        rec.f = f_vector(lat);
        rec.flag = flag_f_vector(lat);
    }
    return rec;
}

FacetComplex SphereRecord::complex(int d) const { return FacetComplex::make(n, facets, d); }

namespace {

// tokenizer over "key=value" fields separated by spaces
std::map<std::string, std::string> split_fields(const std::string& line, int lineno) {
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string tok;
    bool first = true;
    while (in >> tok) {
        if (first) {
            out["#type"] = tok;
            first = false;
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value, got '" + tok + "'", lineno, 0);
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("bad integer '" + s + "'", lineno, 0);
    }
}

VertexSet parse_vertex_list(const std::string& s, int lineno) {
    VertexSet m = 0;
    for (const auto& p : split_on(s, ',')) {
        int v = parse_int(p, lineno);
        if (v < 1 || v > kMaxVertices) throw ParseError("vertex out of range '" + p + "'", lineno, 0);
        m = set_with(m, v);
    }
    return m;
}

void check_facet_containment(const std::vector<VertexSet>& facets, int lineno, int offset) {
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j)
            if (i != j && (facets[i] & facets[j]) == facets[i])
                throw ParseError("facet contained in another facet", lineno, offset);
}

std::string compact_str(const std::vector<VertexSet>& facets) {
    std::string out = "[";
    for (size_t i = 0; i < facets.size(); ++i) {
        if (i) out += ",";
        for (int v : set_elements(facets[i])) out += static_cast<char>('0' + v);
    }
    return out + "]";
}

// "[12345,1358,...]": digits are vertices, n is the largest digit seen
SphereRecord parse_compact(const std::string& line, int lineno) {
    auto close = line.find(']');
    if (close == std::string::npos) throw ParseError("unterminated '['", lineno, 0);
    std::vector<VertexSet> facets;
    VertexSet cur = 0;
    int n = 0;
    for (size_t i = 1; i <= close; ++i) {
        char c = line[i];
        if (c == ',' || c == ']') {
            if (cur == 0) throw ParseError("empty facet", lineno, static_cast<int>(i));
            facets.push_back(cur);
            cur = 0;
            continue;
        }
        if (c < '1' || c > '9') throw ParseError("expected digit", lineno, static_cast<int>(i));
        int v = c - '0';
        if (set_contains(cur, v))
            throw ParseError("digit repeated within a facet", lineno, static_cast<int>(i));
        cur = set_with(cur, v);
        n = std::max(n, v);
    }
    check_facet_containment(facets, lineno, 0);
    SphereRecord rec;
    rec.n = n;
    rec.facets = facets;
    std::sort(rec.facets.begin(), rec.facets.end());
    rec.key = canonical_key(FacetComplex::make(n, rec.facets));
    return rec;
}

std::vector<int> parse_int_list(const std::string& s, int lineno) {
    std::vector<int> out;
    for (const auto& p : split_on(s, ',')) out.push_back(parse_int(p, lineno));
    return out;
}

}  // namespace

std::string emit_sphere_line(const SphereRecord& rec) {
    std::ostringstream out;
    out << "sphere n=" << rec.n << " facets=";
    for (size_t i = 0; i < rec.facets.size(); ++i) {
        if (i) out << ";";
        out << set_str(rec.facets[i]);
    }
    out << " key=" << rec.key.hex();
    if (rec.f) out << " f=" << rec.f->str();
    if (rec.flag) out << " flag=" << rec.flag->str();
    out << " status=" << status_str(rec.status);
    if (rec.n <= 9) out << " compact=" << compact_str(rec.facets);
    return out.str();
}

SphereRecord parse_sphere_line(const std::string& line, int lineno) {
    if (!line.empty() && line[0] == '[') return parse_compact(line, lineno);
    auto fields = split_fields(line, lineno);
    if (fields["#type"] != "sphere") throw ParseError("expected a sphere line", lineno, 0);
    if (!fields.count("n") || !fields.count("facets"))
        throw ParseError("sphere line missing n= or facets=", lineno, 0);
    SphereRecord rec;
    rec.n = parse_int(fields["n"], lineno);
    if (rec.n < 1 || rec.n > kMaxVertices) throw ParseError("n out of range", lineno, 0);
    for (const auto& f : split_on(fields["facets"], ';')) {
        VertexSet m = parse_vertex_list(f, lineno);
        if (m & ~full_set(rec.n)) throw ParseError("vertex larger than n", lineno, 0);
        rec.facets.push_back(m);
    }
    check_facet_containment(rec.facets, lineno, 0);
    std::sort(rec.facets.begin(), rec.facets.end());
    rec.key = canonical_key(FacetComplex::make(rec.n, rec.facets));
    if (fields.count("key") && CanonicalKey::from_hex(fields["key"]) != rec.key)
        throw ParseError("stored key does not match the facets", lineno, 0);
    if (fields.count("status")) {
        try {
            rec.status = status_from(fields["status"]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno, 0);
        }
    }
    // f= and flag= are advisory on input; recomputed when needed
    return rec;
}

std::vector<SphereRecord> read_sphere_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SphereRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_sphere_line(line, lineno));
    }
    return out;
}

void write_sphere_file(const std::string& path, const std::vector<SphereRecord>& recs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& r : recs) out << emit_sphere_line(r) << "\n";
}

// --- realizations -----------------------------------------------------------

std::string emit_realization_line(const RationalPolytope& rec) {
    std::ostringstream out;
    out << "polytope n=" << rec.n << " key=" << rec.key.hex() << " vertices=";
    for (size_t i = 0; i < rec.vertices.size(); ++i) {
        if (i) out << "|";
        out << to_string(rec.vertices[i]);
    }
    out << " facets=";
    for (size_t i = 0; i < rec.facets.size(); ++i) {
        if (i) out << ";";
        for (size_t j = 0; j < rec.facets[i].h.size(); ++j) {
            if (j) out << ",";
            out << rec.facets[i].h[j].get_str();
        }
        out << ":" << set_str(rec.facets[i].incident);
    }
    return out.str();
}

RationalPolytope parse_realization_line(const std::string& line, int lineno) {
    auto fields = split_fields(line, lineno);
    if (fields["#type"] != "polytope") throw ParseError("expected a polytope line", lineno, 0);
    RationalPolytope rec;
    rec.n = parse_int(fields["n"], lineno);
    if (!fields.count("key")) throw ParseError("polytope line missing key=", lineno, 0);
    rec.key = CanonicalKey::from_hex(fields["key"]);
    for (const auto& v : split_on(fields["vertices"], '|')) {
        QVec p;
        for (const auto& c : split_on(v, ',')) {
            try {
                p.push_back(Rational::parse(c));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, 0);
            }
        }
        if (p.size() != 4) throw ParseError("vertex is not in Q^4", lineno, 0);
        rec.vertices.push_back(std::move(p));
    }
    if (static_cast<int>(rec.vertices.size()) != rec.n)
        throw ParseError("vertex count disagrees with n", lineno, 0);
    for (const auto& f : split_on(fields["facets"], ';')) {
        auto colon = f.find(':');
        if (colon == std::string::npos) throw ParseError("facet missing ':'", lineno, 0);
        RationalPolytope::Facet facet;
        for (const auto& c : split_on(f.substr(0, colon), ',')) {
            try {
                facet.h.emplace_back(c);
            } catch (...) {
                throw ParseError("bad hyperplane coefficient '" + c + "'", lineno, 0);
            }
        }
        if (facet.h.size() != 5) throw ParseError("hyperplane is not in Z^5", lineno, 0);
        facet.incident = parse_vertex_list(f.substr(colon + 1), lineno);
        rec.facets.push_back(std::move(facet));
    }
    return rec;
}

std::vector<RationalPolytope> read_realization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<RationalPolytope> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_realization_line(line, lineno));
    }
    return out;
}

void write_realization_file(const std::string& path, const std::vector<RationalPolytope>& recs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& r : recs) out << emit_realization_line(r) << "\n";
}

// --- certificates -------------------------------------------------------------

namespace {

std::string tuple_field(const std::array<int, 5>& t) {
    std::string out;
    for (int i = 0; i < 5; ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    return out;
}

std::array<int, 5> parse_tuple5(const std::string& s, int lineno) {
    auto xs = parse_int_list(s, lineno);
    if (xs.size() != 5) throw ParseError("expected 5 integers", lineno, 0);
    return {xs[0], xs[1], xs[2], xs[3], xs[4]};
}

std::string step_field(const RuleStep& st) {
    std::ostringstream out;
    out << "r" << st.rule << ":" << set_str(st.facet_f) << ":" << set_str(st.facet_g) << ":"
        << set_str(st.ridge) << ":" << tuple_field(st.lhs) << ":" << tuple_field(st.rhs);
    return out.str();
}

RuleStep parse_step(const std::string& s, int lineno) {
    auto parts = split_on(s, ':');
    if (parts.size() != 6 || parts[0].size() != 2 || parts[0][0] != 'r')
        throw ParseError("bad rule step '" + s + "'", lineno, 0);
    RuleStep st;
    st.rule = parts[0][1] - '0';
    st.facet_f = parts[1].empty() ? 0 : parse_vertex_list(parts[1], lineno);
    st.facet_g = parts[2].empty() ? 0 : parse_vertex_list(parts[2], lineno);
    st.ridge = parts[3].empty() ? 0 : parse_vertex_list(parts[3], lineno);
    st.lhs = parse_tuple5(parts[4], lineno);
    st.rhs = parse_tuple5(parts[5], lineno);
    st.rel = st.rule == 3 ? -1 : 1;
    return st;
}

std::string triple_field(const GPTriple& t) {
    std::ostringstream out;
    out << set_str(t.x) << ":" << t.abcd[0] << "," << t.abcd[1] << "," << t.abcd[2] << ","
        << t.abcd[3];
    return out.str();
}

GPTriple parse_triple(const std::string& s, int lineno, int n) {
    auto parts = split_on(s, ':');
    if (parts.size() != 2) throw ParseError("bad triple '" + s + "'", lineno, 0);
    VertexSet x = parse_vertex_list(parts[0], lineno);
    auto abcd = parse_int_list(parts[1], lineno);
    if (set_size(x) != 3 || abcd.size() != 4) throw ParseError("bad triple '" + s + "'", lineno, 0);
    PartialChirotope chi(n);
    GPTriple t;
    // rebuild term ids/parities through the chirotope indexing
    auto xs = set_elements(x);
    t.x = x;
    std::copy(abcd.begin(), abcd.end(), t.abcd.begin());
    auto bracket = [&](int u, int v) {
        auto [mask, par] = sort_tuple({xs[0], xs[1], xs[2], u, v});
        return std::make_pair(chi.tuple_id(mask), par);
    };
    const auto [a, b, c, d] = t.abcd;
    std::array<std::array<std::pair<int, int>, 2>, 3> raw{{
        {bracket(a, b), bracket(c, d)},
        {bracket(a, c), bracket(b, d)},
        {bracket(a, d), bracket(b, c)},
    }};
    for (int i = 0; i < 3; ++i) {
        t.term[i].t1 = raw[i][0].first;
        t.term[i].t2 = raw[i][1].first;
        t.term[i].parity = raw[i][0].second * raw[i][1].second;
    }
    return t;
}

int certificate_n(const std::map<std::string, std::string>& fields, int lineno) {
    auto it = fields.find("n");
    if (it == fields.end()) throw ParseError("certificate missing n=", lineno, 0);
    return parse_int(it->second, lineno);
}

}  // namespace

std::string emit_certificate_line(const CertificateRecord& rec) {
    std::ostringstream out;
    if (!rec.certificate) {
        out << "unresolved key=" << rec.key.hex();
        return out.str();
    }
    const Certificate& cert = *rec.certificate;
    out << "cert key=" << rec.key.hex() << " kind=" << certificate_kind(cert);
    if (!rec.stage.empty()) out << " stage=" << rec.stage;
    // n travels with the certificate so triples can be re-indexed on parse
    if (const auto* gp = std::get_if<GPViolationCertificate>(&cert)) {
        int n = 0;
        for (int v = kMaxVertices; v >= 1; --v)
            if (set_contains(gp->triple.x, v) ||
                std::count(gp->triple.abcd.begin(), gp->triple.abcd.end(), v)) {
                n = std::max(n, v);
            }
        out << " n=" << std::max(n, 7) << " triple=" << triple_field(gp->triple) << " signs=";
        for (int i = 0; i < 6; ++i) {
            if (i) out << ",";
            out << int(gp->signs[i]);
        }
    } else if (const auto* pr = std::get_if<PropagationCertificate>(&cert)) {
        int n = 0;
        for (const auto& st : pr->steps)
            for (int v : set_elements(st.deduced)) n = std::max(n, v);
        for (int v = 1; v <= kMaxVertices; ++v)
            if (set_contains(pr->conflict_triple.x, v)) n = std::max(n, v);
        for (int v : pr->conflict_triple.abcd) n = std::max(n, v);
        out << " n=" << std::max(n, 7);
        out << " pkind="
            << (pr->kind == PropagationCertificate::Kind::ValueConflict
                    ? "value"
                    : pr->kind == PropagationCertificate::Kind::ZeroPartnerForcedNonzero
                          ? "zero-partner"
                          : "violation");
        out << " steps=";
        for (size_t i = 0; i < pr->steps.size(); ++i) {
            if (i) out << "|";
            out << triple_field(pr->steps[i].triple) << ":" << set_str(pr->steps[i].deduced) << ":"
                << int(pr->steps[i].sign);
        }
        out << " conflict=" << triple_field(pr->conflict_triple);
        out << " ctuple=" << set_str(pr->conflict_tuple) << " csign=" << int(pr->conflict_sign);
    } else if (const auto* bf = std::get_if<BiquadraticCertificate>(&cert)) {
        int n = 0;
        for (const auto& [mask, sign] : bf->chirotope)
            for (int v : set_elements(mask)) n = std::max(n, v);
        out << " n=" << std::max(n, 7) << " chi=";
        for (size_t i = 0; i < bf->chirotope.size(); ++i) {
            if (i) out << ";";
            out << set_str(bf->chirotope[i].first) << ":" << int(bf->chirotope[i].second);
        }
        out << " rows=";
        for (size_t i = 0; i < bf->rows.size(); ++i) {
            if (i) out << "|";
            const auto& r = bf->rows[i];
            out << (r.strict ? "S" : "E") << ":" << set_str(r.p) << ":" << set_str(r.q) << ":"
                << set_str(r.r) << ":" << set_str(r.s) << ":" << triple_field(r.source);
        }
        out << " mult=";
        for (size_t i = 0; i < bf->multipliers.size(); ++i) {
            if (i) out << ";";
            out << bf->multipliers[i].str();
        }
    } else if (const auto* rc = std::get_if<RuleConflictCertificate>(&cert)) {
        int n = 0;
        for (int v : set_elements(rc->zero_tuple)) n = std::max(n, v);
        for (const auto& st : rc->steps)
            for (int v : st.lhs) n = std::max(n, v);
        for (int v : rc->anchor_instance.lhs) n = std::max(n, v);
        out << " n=" << std::max(n, 7);
        out << " cycle=" << (rc->from_cycle ? 1 : 0);
        out << " zfacet=" << set_str(rc->zero_facet) << " ztuple=" << set_str(rc->zero_tuple);
        out << " steps=";
        for (size_t i = 0; i < rc->steps.size(); ++i) {
            if (i) out << "|";
            out << step_field(rc->steps[i]);
        }
        out << " anchor=" << step_field(rc->anchor_instance);
    }
    return out.str();
}

CertificateRecord parse_certificate_line(const std::string& line, int lineno) {
    auto fields = split_fields(line, lineno);
    CertificateRecord rec;
    if (fields["#type"] == "unresolved") {
        rec.key = CanonicalKey::from_hex(fields.at("key"));
        return rec;
    }
    if (fields["#type"] != "cert") throw ParseError("expected cert or unresolved line", lineno, 0);
    rec.key = CanonicalKey::from_hex(fields.at("key"));
    if (fields.count("stage")) rec.stage = fields["stage"];
    const std::string kind = fields.at("kind");
    const int n = certificate_n(fields, lineno);
    if (kind == "gp-violation") {
        GPViolationCertificate cert;
        cert.triple = parse_triple(fields.at("triple"), lineno, n);
        auto signs = parse_int_list(fields.at("signs"), lineno);
        if (signs.size() != 6) throw ParseError("expected 6 signs", lineno, 0);
        for (int i = 0; i < 6; ++i) cert.signs[i] = static_cast<std::int8_t>(signs[i]);
        rec.certificate = Certificate(std::move(cert));
    } else if (kind == "propagation-contradiction") {
        PropagationCertificate cert;
        const std::string pk = fields.at("pkind");
        cert.kind = pk == "value" ? PropagationCertificate::Kind::ValueConflict
                    : pk == "zero-partner"
                        ? PropagationCertificate::Kind::ZeroPartnerForcedNonzero
                        : PropagationCertificate::Kind::CompletedViolation;
        if (!fields["steps"].empty())
            for (const auto& s : split_on(fields["steps"], '|')) {
                auto parts = split_on(s, ':');
                if (parts.size() != 4) throw ParseError("bad propagation step", lineno, 0);
                PropagationStep st;
                st.triple = parse_triple(parts[0] + ":" + parts[1], lineno, n);
                st.deduced = parse_vertex_list(parts[2], lineno);
                st.sign = static_cast<std::int8_t>(parse_int(parts[3], lineno));
                cert.steps.push_back(std::move(st));
            }
        cert.conflict_triple = parse_triple(fields.at("conflict"), lineno, n);
        if (!fields["ctuple"].empty()) cert.conflict_tuple = parse_vertex_list(fields["ctuple"], lineno);
        cert.conflict_sign = static_cast<std::int8_t>(parse_int(fields.at("csign"), lineno));
        rec.certificate = Certificate(std::move(cert));
    } else if (kind == "bfp") {
        BiquadraticCertificate cert;
        for (const auto& s : split_on(fields.at("chi"), ';')) {
            auto parts = split_on(s, ':');
            if (parts.size() != 2) throw ParseError("bad chi entry", lineno, 0);
            cert.chirotope.emplace_back(parse_vertex_list(parts[0], lineno),
                                        static_cast<std::int8_t>(parse_int(parts[1], lineno)));
        }
        if (!fields["rows"].empty())
            for (const auto& s : split_on(fields.at("rows"), '|')) {
                auto parts = split_on(s, ':');
                if (parts.size() != 7) throw ParseError("bad bfp row", lineno, 0);
                BfpRow row;
                row.strict = parts[0] == "S";
                row.p = parse_vertex_list(parts[1], lineno);
                row.q = parse_vertex_list(parts[2], lineno);
                row.r = parse_vertex_list(parts[3], lineno);
                row.s = parse_vertex_list(parts[4], lineno);
                row.source = parse_triple(parts[5] + ":" + parts[6], lineno, n);
                cert.rows.push_back(std::move(row));
            }
        for (const auto& s : split_on(fields.at("mult"), ';')) {
            try {
                cert.multipliers.push_back(Rational::parse(s));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, 0);
            }
        }
        rec.certificate = Certificate(std::move(cert));
    } else if (kind == "rule-conflict") {
        RuleConflictCertificate cert;
        cert.from_cycle = fields.at("cycle") == "1";
        if (!fields["zfacet"].empty()) cert.zero_facet = parse_vertex_list(fields["zfacet"], lineno);
        cert.zero_tuple = parse_vertex_list(fields.at("ztuple"), lineno);
        if (!fields["steps"].empty())
            for (const auto& s : split_on(fields["steps"], '|'))
                cert.steps.push_back(parse_step(s, lineno));
        cert.anchor_instance = parse_step(fields.at("anchor"), lineno);
        rec.certificate = Certificate(std::move(cert));
    } else {
        throw ParseError("unknown certificate kind '" + kind + "'", lineno, 0);
    }
    return rec;
}

std::vector<CertificateRecord> read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<CertificateRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_certificate_line(line, lineno));
    }
    return out;
}

void write_certificate_file(const std::string& path, const std::vector<CertificateRecord>& recs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& r : recs) out << emit_certificate_line(r) << "\n";
}

// --- reports -------------------------------------------------------------------

ReportTable build_report(const std::vector<SphereRecord>& recs, GroupBy by) {
    // group key: (n, facet count) or the (flag) f-vector
    struct Agg {
        int spheres = 0, polytopes = 0, nonreal = 0;
        std::set<std::string> fvectors;
    };
    std::map<std::pair<int, std::vector<int>>, Agg> groups;
    for (const auto& rec : recs) {
        auto lat = build_face_poset(rec.complex());
        auto fv = f_vector(lat);
        auto fl = flag_f_vector(lat);
        std::vector<int> gkey;
        switch (by) {
            case GroupBy::Facets: gkey = {static_cast<int>(rec.facets.size())}; break;
            case GroupBy::FVector: gkey = fv.f; break;
            case GroupBy::FlagFVector:
                gkey = fl.f;
                gkey.push_back(fl.f02);
                break;
        }
        Agg& agg = groups[{rec.n, gkey}];
        agg.spheres++;
        if (rec.status == SphereStatus::PolytopeRealized) agg.polytopes++;
        if (rec.status == SphereStatus::CertifiedNonRealizable) agg.nonreal++;
        agg.fvectors.insert(fv.str());
    }
    ReportTable table;
    table.by = by;
    for (const auto& [key, agg] : groups) {
        ReportRow row;
        const auto& [n, gkey] = key;
        std::ostringstream label;
        if (by == GroupBy::Facets) {
            label << "(" << n << ",*,*," << gkey[0] << ")";
        } else if (by == GroupBy::FVector) {
            label << "(";
            for (size_t i = 0; i < gkey.size(); ++i) label << (i ? "," : "") << gkey[i];
            label << ")";
        } else {
            label << "(";
            for (size_t i = 0; i + 1 < gkey.size(); ++i) label << (i ? "," : "") << gkey[i];
            label << ";" << gkey.back() << ")";
        }
        row.group = label.str();
        row.spheres = agg.spheres;
        row.polytopes = agg.polytopes;
        row.nonrealizable = agg.nonreal;
        row.fvectors = static_cast<int>(agg.fvectors.size());
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render_report_text(const ReportTable& table) {
    std::ostringstream out;
    out << "group                      spheres  polytopes  non-realizable";
    if (table.by == GroupBy::Facets) out << "  f-vectors";
    out << "\n";
    long s = 0, p = 0, c = 0;
    for (const auto& row : table.rows) {
        out << row.group;
        for (size_t pad = row.group.size(); pad < 25; ++pad) out << ' ';
        char buf[96];
        std::snprintf(buf, sizeof buf, " %8d %10d %15d", row.spheres, row.polytopes,
                      row.nonrealizable);
        out << buf;
        if (table.by == GroupBy::Facets) {
            std::snprintf(buf, sizeof buf, " %10d", row.fvectors);
            out << buf;
        }
        out << "\n";
        s += row.spheres;
        p += row.polytopes;
        c += row.nonrealizable;
    }
    out << "total                    ";
    char buf[96];
    std::snprintf(buf, sizeof buf, " %8ld %10ld %15ld", s, p, c);
    out << buf << "\n";
    return out.str();
}

std::string render_report_machine(const ReportTable& table) {
    std::ostringstream out;
    for (const auto& row : table.rows)
        out << "row group=" << row.group << " spheres=" << row.spheres
            << " polytopes=" << row.polytopes << " nonrealizable=" << row.nonrealizable
            << " fvectors=" << row.fvectors << "\n";
    return out.str();
}

ReportRow ReportTable::totals(int n) const {
    ReportRow total;
    total.group = "(" + std::to_string(n) + ",*,*,*)";
    std::set<std::string> seen;
    for (const auto& row : rows) {
        if (row.group.substr(0, total.group.find('*')) !=
            total.group.substr(0, total.group.find('*')))
            continue;
        total.spheres += row.spheres;
        total.polytopes += row.polytopes;
        total.nonrealizable += row.nonrealizable;
        total.fvectors += row.fvectors;
    }
    return total;
}

// --- applications ------------------------------------------------------------------

std::optional<std::vector<int>> complete_multipartite_parts(const VertexGraph& g) {
    // complement must be a disjoint union of cliques
    const int n = g.n;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> classes;
    for (int v = 1; v <= n; ++v) {
        if (comp[v - 1] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({});
        // non-neighbours of v (plus v) should form one complement clique
        std::vector<int> members{v};
        for (int u = 1; u <= n; ++u)
            if (u != v && !g.has_edge(u, v)) members.push_back(u);
        for (int u : members) {
            if (comp[u - 1] >= 0) return std::nullopt;
            comp[u - 1] = id;
        }
        classes[id] = members;
        // complement clique: no edges inside, all edges outside
        for (int a : members)
            for (int b : members)
                if (a != b && g.has_edge(a, b)) return std::nullopt;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (comp[a - 1] != comp[b - 1] && !g.has_edge(a, b)) return std::nullopt;
    std::vector<int> parts;
    for (const auto& cls : classes) parts.push_back(static_cast<int>(cls.size()));
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::vector<MultipartiteRow> analyze_multipartite(const std::vector<SphereRecord>& recs) {
    std::map<std::vector<int>, MultipartiteRow> rows;
    for (const auto& rec : recs) {
        if (rec.status != SphereStatus::PolytopeRealized) continue;
        auto lat = build_face_poset(rec.complex());
        auto parts = complete_multipartite_parts(vertex_edge_graph(lat));
        if (!parts) continue;
        auto& row = rows[*parts];
        row.parts = *parts;
        row.count++;
        row.keys.push_back(rec.key.hex());
    }
    std::vector<MultipartiteRow> out;
    for (auto& [k, v] : rows) out.push_back(std::move(v));
    return out;
}

std::vector<std::string> analyze_flag_gaps(const std::vector<SphereRecord>& recs) {
    auto table = build_report(recs, GroupBy::FlagFVector);
    std::vector<std::string> out;
    for (const auto& row : table.rows)
        if (row.polytopes == 0 && row.spheres > 0) out.push_back(row.group);
    return out;
}

}  // namespace polyenum
