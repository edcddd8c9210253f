// Exact classification of static equilibria of a convex polyhedron or
// polygon resting under gravity: stable points on faces, saddles on edges,
// unstable points at vertices, all with respect to a given center of mass.
//
// Every test reduces to support-plane margins measured as heights along unit
// directions, compared against eps = eps_rel x diameter. Margins inside the
// +-eps band are reported as marginal and excluded from the counts.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monostatic/geom.hpp"
#include "monostatic/mass.hpp"
#include "monostatic/polyhedron.hpp"

namespace monostatic {

inline constexpr double kDefaultEpsRel = 1e-9;

struct StablePoint {
    int face = -1;
    Vec3 foot;
};

struct SaddlePoint {
    std::pair<int, int> edge{-1, -1};
    Vec3 foot;
};

struct MarginalItem {
    std::string kind;  // "vertex" | "edge" | "face"
    int id = -1;       // vertex id, edge index in report order, or face id
    int id2 = -1;      // second vertex for edges
    double margin = 0.0;
};

struct EquilibriumReport {
    std::vector<StablePoint> stable;
    std::vector<SaddlePoint> saddles;
    std::vector<int> unstable;
    std::vector<MarginalItem> marginal;
    int S = 0, H = 0, U = 0;
    Vec3 centroid;
    MassModel model = MassModel::Vertex;

    bool mono_monostatic() const { return S == 1 && U == 1 && marginal.empty(); }
};

// 2D report: stable items are edges (foot of the centroid perpendicular
// inside the edge), unstable items are vertices; there are no saddles.
struct EquilibriumReport2D {
    std::vector<std::pair<int, Vec2>> stable;  // edge index i (from vertex i to i+1), foot
    std::vector<int> unstable;
    std::vector<MarginalItem> marginal;
    int S = 0, U = 0;
    Vec2 centroid;
    MassModel model = MassModel::Vertex;

    bool mono_monostatic() const { return S == 1 && U == 1 && marginal.empty(); }
};

// Throws if the polyhedron is invalid or C is not strictly interior.
EquilibriumReport classify(const Polyhedron& poly, const Centroid& c,
                           double eps_rel = kDefaultEpsRel);

EquilibriumReport2D classify_2d(const Polygon2D& poly, const Centroid2D& c,
                                double eps_rel = kDefaultEpsRel);

// Tipping condition |x_i| < |x_j| cos(theta_ij), equivalently
// x_i . (x_j - x_i) > 0: the body tips away from the feature with support
// vector x_i toward x_j. Strict with margin eps (support-height units).
bool tipping_test(const Vec3& xi, const Vec3& xj, double eps = 0.0);

// Mechanical complexity 2(V + F - S - U).
long long complexity(const EquilibriumReport& report, const Polyhedron& poly);

}  // namespace monostatic
