// 3D convex hull with coplanar-face merging. The hull is the independent
// reconstruction used to validate built polyhedra and to turn raw point
// clouds (fixtures, random test bodies) into face lattices.
#pragma once

#include <string>
#include <vector>

#include "monostatic/geom.hpp"
#include "monostatic/polyhedron.hpp"

namespace monostatic {

struct HullOptions {
    // Merge adjacent facets whose supporting planes coincide within this
    // fraction of the diameter.
    double merge_tol_rel = 1e-8;
};

// Faces reference the *input* point indices; interior points simply do not
// appear. Throws ConstructionError for degenerate input (fewer than 4
// points, or all coplanar).
struct HullResult {
    std::vector<Face> faces;          // merged, CCW from outside
    std::vector<int> hull_vertices;   // sorted original indices on the hull

    // Polyhedron over the compacted vertex set (hull_vertices order).
    Polyhedron to_polyhedron(const std::vector<Vec3>& points) const;
};

HullResult convex_hull(const std::vector<Vec3>& points, const HullOptions& opts = {});

// True when the two polyhedra have identical vertex sets and the same face
// cycles up to rotation (orientation preserved).
bool same_face_lattice(const Polyhedron& a, const Polyhedron& b);

}  // namespace monostatic
