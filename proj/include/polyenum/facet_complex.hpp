#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyenum {

/// Vertex subset of {1..n}, n <= 15, as a bitmask: bit (v-1) set iff v in set.
using VertexSet = std::uint32_t;

constexpr int kMaxVertices = 15;

inline int set_size(VertexSet s) { return __builtin_popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> (v - 1)) & 1u; }
inline VertexSet set_with(VertexSet s, int v) { return s | (1u << (v - 1)); }
inline VertexSet full_set(int n) { return (1u << n) - 1u; }
inline VertexSet single(int v) { return 1u << (v - 1); }

std::vector<int> set_elements(VertexSet s);
VertexSet set_of(const std::vector<int>& vs);
std::string set_str(VertexSet s);  // "1,2,5"

/// A candidate combinatorial (d-1)-sphere given by its facets. d is the rank
/// parameter: facets of 3-spheres live in rank-5 lattices (d = 4).
///
/// The structural conditions checked by `basic_check` are necessary only;
/// whether the complex really is a sphere is decided by the lattice checks.
struct FacetComplex {
    int n = 0;
    int d = 4;
    std::vector<VertexSet> facets;  // kept sorted ascending, no duplicates

    static FacetComplex make(int n, std::vector<VertexSet> facets, int d = 4);

    /// Empty string when the necessary conditions hold, otherwise a reason:
    /// facet smaller than d, facet containment, vertex in fewer than d facets,
    /// vertex out of range.
    std::string basic_check() const;

    bool operator==(const FacetComplex& o) const = default;
};

/// Intersection-closed face poset of a facet complex: the closure of the
/// facets under pairwise intersection, plus bottom (empty set), top (full
/// vertex set) and one atom per vertex that appears in a facet.
///
/// Rank is the length of a longest chain from the bottom.
struct FaceLattice {
    int n = 0;
    std::vector<VertexSet> faces;   // sorted by (size, mask); faces[0] = empty
    std::vector<int> rank;
    int top_rank = 0;

    // subset relation as bitsets over face indices: below[i] has bit j set
    // iff faces[j] is a subset of faces[i]; above[i] is the transpose
    std::vector<std::vector<std::uint64_t>> below;
    std::vector<std::vector<std::uint64_t>> above;

    int face_index(VertexSet f) const;  // -1 when absent
    bool leq(int i, int j) const { return (below[j][i >> 6] >> (i & 63)) & 1ull; }
    size_t size() const { return faces.size(); }

    /// Facet indices containing the given face (restricted to coatom layer
    /// of the generating complex is not assumed; this is plain superset
    /// lookup among the stored generator facets).
    std::vector<int> coatoms_above(VertexSet f) const;

    std::vector<VertexSet> generators;  // the facets the lattice was built from
};

/// Throws std::invalid_argument if a facet equals the full vertex set while
/// other facets exist (the poset degenerates: the top would be a coatom).
FaceLattice build_face_poset(const FacetComplex& complex);

/// Same construction without the degeneracy rejection; for inspecting
/// candidates that build_face_poset refuses.
FaceLattice build_closure_poset(const FacetComplex& complex);

/// True iff every maximal chain has length exactly r.
bool is_graded_rank(const FaceLattice& lattice, int r);

/// True iff every closed interval [x, y] with rank difference >= 1 has the
/// same number of odd-rank and even-rank elements. Requires a graded lattice.
bool is_eulerian(const FaceLattice& lattice);

/// True iff for every x < y with rank difference >= 3 the open interval
/// (x, y) is connected as a comparability graph.
bool is_interval_connected(const FaceLattice& lattice);

struct FVector {
    std::vector<int> f;  // f[i] = number of faces of rank i+1 (f0..f_{d-1})
    bool operator==(const FVector& o) const = default;
    std::string str() const;  // "(5,10,10,5)"
};

struct FlagFVector {
    std::vector<int> f;
    int f02 = 0;  // incident (vertex, facet) pairs, i.e. the sum of facet sizes
    bool operator==(const FlagFVector& o) const = default;
    std::string str() const;  // "(5,10,10,5;20)"
};

FVector f_vector(const FaceLattice& lattice);
FlagFVector flag_f_vector(const FaceLattice& lattice);

/// Edges of the lattice's rank-2 faces as an adjacency mask per vertex.
struct VertexGraph {
    int n = 0;
    std::vector<VertexSet> adj;  // adj[v-1] = neighbours of v
    int edge_count() const;
    bool has_edge(int u, int v) const { return set_contains(adj[u - 1], v); }
};

VertexGraph vertex_edge_graph(const FaceLattice& lattice);

/// The full validity pipeline for a candidate sphere: basic structural
/// conditions, poset build, graded of rank d+1, atoms are exactly the n
/// vertices, Eulerian, interval connected.
struct ValidityResult {
    bool valid = false;
    std::string failed_check;  // empty when valid
};

ValidityResult check_sphere(const FacetComplex& complex);

}  // namespace polyenum
