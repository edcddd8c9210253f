// Construction of the D_k-symmetric spiral polyhedron (k >= 3) and the
// planar double-spiral polygon (k = 2) from an angle vector.
#pragma once

#include <string>
#include <vector>

#include "monostatic/polyhedron.hpp"
#include "monostatic/spiral.hpp"

namespace monostatic {

// Vertex layout: index 0 is the apex; the vertex of chain j at level i
// (i = 1..n) is 1 + j*n + (i-1).
struct KSpiralBuild {
    Polyhedron poly;
    double apex_height = 0.0;            // 1 + h
    std::vector<std::string> warnings;   // e.g. non-outwards levels i > 0
};

// Vertices: apex (0,0,1+h) and, for each chain j and level i, the point at
// radius x_i / cos(pi/k), azimuth 2*pi*j/k, height z_i. Faces: k apex
// triangles, k*(n-1) trapezoids, one base k-gon. Validates the full set of
// polyhedron invariants and throws ConstructionError on any violation.
KSpiralBuild build_k_spiral(const SpiralParams& params);

// 2n+1-gon: top vertex (0,1) plus mirror pairs (+-x_i, z_i), CCW. k must be 2.
Polygon2D build_double_spiral(const SpiralParams& params);

}  // namespace monostatic
