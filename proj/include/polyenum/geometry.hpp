#pragma once

#include "polyenum/canonical.hpp"
#include "polyenum/facet_complex.hpp"
#include "polyenum/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyenum {

struct DegeneracyError : std::runtime_error {
    int affine_dim;
    explicit DegeneracyError(int affine_dim)
        : std::runtime_error("points affinely span only dimension " + std::to_string(affine_dim)),
          affine_dim(affine_dim) {}
};

/// Exact rational 4-polytope. Facet hyperplanes h live in Z^5 with the
/// inward convention: (1,v).h = 0 on incident vertices and (1,v).h < 0
/// strictly on all others; h is primitive.
struct RationalPolytope {
    int n = 0;
    std::vector<QVec> vertices;  // Q^4
    struct Facet {
        std::vector<BigInt> h;  // 5 integers
        VertexSet incident = 0;
    };
    std::vector<Facet> facets;
    CanonicalKey key;

    FacetComplex incidence_complex() const;

    /// max over all coordinates of |numerator| + denominator; the registry
    /// keeps the realization with the smaller score
    BigInt simplicity_score() const;
};

/// Incremental beneath-beyond hull of points in Q^4 with exact orientation
/// tests; coplanar facets are merged, interior and non-extreme input points
/// are absent from the vertex list. Throws DegeneracyError when the points
/// do not affinely span Q^4.
RationalPolytope convex_hull(const std::vector<QVec>& points);

/// True iff the hull of the coordinates realizes the sphere's combinatorial
/// type (equal canonical keys).
bool verify_realization(const FacetComplex& sphere, const std::vector<QVec>& coords,
                        std::string* diagnostic = nullptr);

// --- hyperplane arrangements -------------------------------------------------

/// Axis-aligned rational box; dim is taken from the corner size (2 or 4 here).
struct Cuboid {
    QVec lo, hi;
    int dim() const { return static_cast<int>(lo.size()); }
};

/// Box around all 0-dimensional faces of the arrangement with a padding of
/// one unit; throws std::invalid_argument when no vertex exists.
Cuboid bounding_cuboid(const std::vector<std::vector<BigInt>>& hyperplanes);

/// One nonempty face of the arrangement, clipped to the box.
struct ArrangementFace {
    std::vector<std::int8_t> sign;  // over the input hyperplanes
    std::vector<QVec> verts;        // vertices of the clipped face
    QVec rep;                       // barycenter of verts
    int dim = 0;
};

/// Every nonempty face of the arrangement of the given hyperplanes clipped
/// to the box: cells are found by wall-crossing BFS from a generic start
/// cell, lower faces come from the face structure of the cell polytopes,
/// deduplicated by sign vector.
std::vector<ArrangementFace> arrangement_faces(const std::vector<std::vector<BigInt>>& hyperplanes,
                                               const Cuboid& box);

QVec interior_point_barycenter(const ArrangementFace& face);

struct SimpleRuleOptions {
    // spanning subsets of the face's vertices are enumerated by size
    // (minimal cardinality up to +2) under a deterministic budget
    long max_subsets = 4000;
};

/// Minimum-simplicity barycenter over small affinely spanning vertex
/// subsets; the score of a point is max over coordinates of |num| + den.
QVec interior_point_simple(const ArrangementFace& face, const SimpleRuleOptions& opts = {});

enum class PointRule { Barycenter, Simple };

// --- inductive generation ----------------------------------------------------

/// The standard 4-simplex: origin plus the four unit points.
RationalPolytope standard_simplex();

struct GenerateOptions {
    PointRule rule = PointRule::Barycenter;
    int workers = 1;
    SimpleRuleOptions simple;
};

/// One induction step: for every seed with k-1 vertices, insert the chosen
/// interior point of every arrangement face of its facet hyperplanes, keep
/// hulls with exactly k vertices, deduplicate by canonical key. On key
/// collisions the realization with the smaller simplicity score survives.
Registry<RationalPolytope> generate_polytopes(const std::vector<RationalPolytope>& seeds, int k,
                                              const GenerateOptions& opts = {});

}  // namespace polyenum
