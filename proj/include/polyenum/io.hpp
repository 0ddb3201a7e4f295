#pragma once

#include "polyenum/canonical.hpp"
#include "polyenum/chirotope.hpp"
#include "polyenum/facet_complex.hpp"
#include "polyenum/geometry.hpp"
#include "polyenum/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polyenum {

struct ParseError : std::runtime_error {
    int line = 0, offset = 0;
    ParseError(const std::string& msg, int line, int offset);
};

enum class SphereStatus { Sphere, PolytopeRealized, CertifiedNonRealizable, Unresolved };

std::string status_str(SphereStatus s);
SphereStatus status_from(const std::string& s);

/// One classified combinatorial type. The key always matches the facets.
struct SphereRecord {
    int n = 0;
    std::vector<VertexSet> facets;
    CanonicalKey key;
    std::optional<FVector> f;
    std::optional<FlagFVector> flag;
    SphereStatus status = SphereStatus::Sphere;

    static SphereRecord from_complex(const FacetComplex& c, bool with_vectors = true);
    FacetComplex complex(int d = 4) const;
};

/// Sphere interchange format. Emitters always write the general form
/// ("sphere n=9 facets=... key=...") and append the compact bracket form
/// ("[12345,...]") while n <= 9; the parser accepts either a general line or
/// a bare compact line.
std::string emit_sphere_line(const SphereRecord& rec);
SphereRecord parse_sphere_line(const std::string& line, int lineno = 0);

std::vector<SphereRecord> read_sphere_file(const std::string& path);
void write_sphere_file(const std::string& path, const std::vector<SphereRecord>& recs);

/// Realization interchange: coordinates serialize as "p/q" strings, facet
/// hyperplanes as integer 5-vectors with their incident vertex lists.
std::string emit_realization_line(const RationalPolytope& rec);
RationalPolytope parse_realization_line(const std::string& line, int lineno = 0);
std::vector<RationalPolytope> read_realization_file(const std::string& path);
void write_realization_file(const std::string& path, const std::vector<RationalPolytope>& recs);

/// Certificate file: one line per classified sphere, either
/// "cert key=<hex> kind=... <payload>" or "unresolved key=<hex>".
struct CertificateRecord {
    CanonicalKey key;
    std::optional<Certificate> certificate;  // nullopt = unresolved line
    std::string stage;                       // recorded pipeline stage
};

std::string emit_certificate_line(const CertificateRecord& rec);
CertificateRecord parse_certificate_line(const std::string& line, int lineno = 0);
std::vector<CertificateRecord> read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const std::vector<CertificateRecord>& recs);

// --- reports ------------------------------------------------------------

enum class GroupBy { Facets, FVector, FlagFVector };

struct ReportRow {
    std::string group;
    int spheres = 0;
    int polytopes = 0;
    int nonrealizable = 0;
    int fvectors = 0;  // distinct f-vectors in the group (facet grouping only)
};

struct ReportTable {
    GroupBy by = GroupBy::Facets;
    std::vector<ReportRow> rows;  // facet count ascending, f-vectors
                                  // lexicographic, grouped by n
    ReportRow totals(int n) const;
};

ReportTable build_report(const std::vector<SphereRecord>& recs, GroupBy by);
std::string render_report_text(const ReportTable& table);
std::string render_report_machine(const ReportTable& table);

// --- applications ---------------------------------------------------------

/// Partition sizes (descending) when the graph is complete multipartite,
/// i.e. its complement is a disjoint union of cliques.
std::optional<std::vector<int>> complete_multipartite_parts(const VertexGraph& g);

struct MultipartiteRow {
    std::vector<int> parts;
    int count = 0;
    std::vector<std::string> keys;  // hex keys of the polytopes
};

/// Scans realized polytopes for complete multipartite vertex-edge graphs.
std::vector<MultipartiteRow> analyze_multipartite(const std::vector<SphereRecord>& recs);

/// Flag f-vectors attained by spheres but by no polytope.
std::vector<std::string> analyze_flag_gaps(const std::vector<SphereRecord>& recs);

}  // namespace polyenum
