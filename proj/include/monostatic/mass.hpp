// Centers of mass under the four mass models (vertex/edge/face skeletons and
// the homogeneous solid) and the closed-form centroid heights of the spiral
// constructions.
#pragma once

#include <string>

#include "monostatic/geom.hpp"
#include "monostatic/polyhedron.hpp"
#include "monostatic/spiral.hpp"

namespace monostatic {

enum class MassModel { Vertex, Edge, Face, Solid };

MassModel mass_model_from_string(const std::string& name);
std::string to_string(MassModel model);

struct Centroid {
    Vec3 point;
    double mass = 0.0;
    MassModel model = MassModel::Vertex;
};

struct Centroid2D {
    Vec2 point;
    double mass = 0.0;
    MassModel model = MassModel::Vertex;
};

// Vertex: mean of vertices. Edge: length-weighted edge midpoints. Face:
// area-weighted face centroids (fan triangulation). Solid: signed tetrahedra
// against the origin. Throws on zero-measure input for the selected model.
Centroid centroid(const Polyhedron& poly, MassModel model);

// 2D analogue; Face and Solid both mean the homogeneous disc.
Centroid2D centroid(const Polygon2D& poly, MassModel model);

// Closed-form centroid height of the k-spiral vertex skeleton.
//   uncorrected: (1 + k S_n) / (1 + k n)
//   corrected:   adds the apex-lift term sin^2(alpha1) tan^2(pi/k) / k to S_n
//                for k >= 3; equals uncorrected for k = 2.
struct ZcClosedForm {
    double uncorrected = 0.0;
    double corrected = 0.0;
};

ZcClosedForm zc_closed_form(const SpiralParams& params);

// Sum of m_i (p_i - C) with C the mass-weighted mean; the zero vector up to
// roundoff, exposed as a self-consistency probe for loaded data.
Vec3 balance_residual(const std::vector<Vec3>& points, const std::vector<double>& masses);

}  // namespace monostatic
