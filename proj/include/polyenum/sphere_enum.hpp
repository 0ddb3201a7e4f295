#pragma once

#include "polyenum/canonical.hpp"
#include "polyenum/facet_complex.hpp"

#include <string>
#include <vector>

namespace polyenum {

/// Replaces f1 and f2 by their union. Throws std::invalid_argument unless
/// f1 and f2 are facets meeting in a ridge (a rank d-1 face) of M's lattice.
/// The result is a candidate only; callers must run the lattice checks.
FacetComplex untriangulate(const FacetComplex& M, VertexSet f1, VertexSet f2);

struct EnumerationResult {
    Registry<std::vector<VertexSet>> types;  // canonical key -> facet list
    KeySet non_types;                        // keys of rejected candidates
    long candidates_checked = 0;
};

/// Algorithm: starting from simplicial seeds, repeatedly untriangulate and
/// keep everything that passes the sphere checks, memoizing both valid types
/// and failed candidates so nothing is lattice-checked twice. Work is
/// partitioned over the seeds; the merged key set is independent of the
/// worker count.
EnumerationResult enumerate_spheres(const std::vector<FacetComplex>& seeds, int workers = 1);

/// All simplicial 3-spheres with exactly n vertices up to isomorphism, by
/// depth-first facet insertion over open ridges with manifold pruning.
/// Rejects n > 8: larger seed sets come from an external census through
/// ingest_seeds.
std::vector<FacetComplex> enumerate_simplicial(int n);

struct IngestResult {
    std::vector<FacetComplex> seeds;
    std::vector<std::string> warnings;  // e.g. duplicates dropped
};

/// Reads a sphere interchange file of simplicial seeds, validates every
/// complex (facet sizes, all lattice checks), and deduplicates by canonical
/// key with a warning per duplicate.
IngestResult ingest_seeds(const std::string& path);

}  // namespace polyenum
