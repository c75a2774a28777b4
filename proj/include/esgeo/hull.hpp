// Convex hulls with exact predicates and the dual-representation polytope.
#pragma once

#include "esgeo/core.hpp"

namespace esgeo {

struct Facet {
    OrientedPlane plane;           // outward: every other vertex strictly in H^-
    std::array<int, 3> verts{};    // indices into Polytope::vertices
    std::array<int, 3> neighbors{};  // facet across edge (verts[i], verts[i+1])
};

struct Polytope {
    PointSet vertices;
    std::vector<Facet> facets;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> original_index;  // vertex -> index in the input set

    int f0() const { return vertices.size(); }
    int f1() const { return static_cast<int>(edges.size()); }
    int f2() const { return static_cast<int>(facets.size()); }

    std::vector<std::vector<int>> facet_adjacency() const;
    std::vector<std::vector<int>> vertex_adjacency() const;
    // Inward representation: interior = {x : n.x <= c} for each facet,
    // flipped into the library's H+ convention.
    HalfSpaceSystem inward_halfspaces() const;
    bool contains(const Point& p) const;           // closed
    bool strictly_contains(const Point& p) const;  // interior
    // Full invariant check: incidence, strict outwardness, edge sharing,
    // the Euler relation f0 - f1 + f2 = 2.
    void verify(const PointSet& original) const;
};

// Incremental 3D hull. Requires full-dimensional input with no point on a
// facet plane of any intermediate hull; general position suffices. Throws
// Degenerate with a witness otherwise.
Polytope convex_hull3(const PointSet& X);

// All-triples facet enumeration for small sets whose hull is simplicial
// even when the set is not in general position (regular octahedra and
// friends). Quartic; guarded.
Polytope hull3_bruteforce(const PointSet& X);

// Indices of hull vertices in counterclockwise order; strictly convex
// (collinear boundary points are not vertices).
std::vector<int> convex_hull2(const PointSet& X);

}  // namespace esgeo
