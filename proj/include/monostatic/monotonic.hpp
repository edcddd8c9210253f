// Radial monotonicity of a convex solid about an axis: along every meridian
// half-plane section, the polar distance from the centroid must be strictly
// monotone. When this holds, the body cannot be mono-monostatic as a
// homogeneous solid.
#pragma once

#include <string>

#include "monostatic/geom.hpp"
#include "monostatic/polyhedron.hpp"

namespace monostatic {

struct MonotonicityResult {
    bool monotone = false;
    std::string witness;  // first violation found, empty when monotone
};

// The per-face test uses the locus of perpendicular feet from C onto the
// meridian section lines within each face plane (a Thales circle over the
// segment from the in-plane foot of C to the axis pierce point); a locus
// point interior to a face is an interior extremum of r along its meridian.
// Cross-edge consistency of the meridian derivative sign covers breaks at
// edges. Throws if the axis line through C misses the body or C is outside.
MonotonicityResult radial_monotonicity(const Polyhedron& poly, const Vec3& centroid,
                                       const Vec3& axis);

}  // namespace monostatic
