#include "monostatic/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monostatic {

namespace {

// Largest support height of any vertex other than the listed ones above the
// plane through `foot` with outward unit direction `u`.
double worst_support_margin(const std::vector<Vec3>& verts, const Vec3& foot, const Vec3& u,
                            int skip_a, int skip_b) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (i == skip_a || i == skip_b) continue;
        worst = std::max(worst, (verts[i] - foot).dot(u));
    }
    return worst;
}

}  // namespace

EquilibriumReport classify(const Polyhedron& poly, const Centroid& c, double eps_rel) {
    poly.require_valid();
    const double diam = poly.diameter();
    const double eps = eps_rel * diam;
    const Vec3 C = c.point;

    // C strictly interior: behind every face plane by more than eps.
    for (int fi = 0; fi < poly.face_count(); ++fi) {
        Vec3 n = poly.face_normal(fi);
        double depth = (poly.vertices[poly.faces[fi][0]] - C).dot(n);
        if (depth <= eps)
            throw ConstructionError("centroid is not strictly inside the body (face " +
                                    std::to_string(fi) + ")");
    }

    EquilibriumReport rep;
    rep.centroid = C;
    rep.model = c.model;

    // Vertices: v is unstable iff every other vertex lies strictly below the
    // support plane through v normal to v - C.
    for (int vi = 0; vi < poly.vertex_count(); ++vi) {
        const Vec3& v = poly.vertices[vi];
        Vec3 u = (v - C).normalized();
        double worst = worst_support_margin(poly.vertices, v, u, vi, -1);
        if (worst < -eps)
            rep.unstable.push_back(vi);
        else if (worst <= eps)
            rep.marginal.push_back({"vertex", vi, -1, worst});
    }

    // Edges: saddle iff the perpendicular foot of C lies strictly inside the
    // segment and the support plane through the foot clears all other vertices.
    for (const auto& [a, b] : poly.edges()) {
        const Vec3& A = poly.vertices[a];
        const Vec3& B = poly.vertices[b];
        Vec3 d = B - A;
        double len = d.norm();
        double t = (C - A).dot(d) / d.dot(d);
        double inset = std::min(t, 1.0 - t) * len;
        if (inset <= eps) {
            if (std::abs(inset) <= eps) rep.marginal.push_back({"edge", a, b, inset});
            continue;
        }
        Vec3 foot = A + t * d;
        Vec3 u = (foot - C).normalized();
        double worst = worst_support_margin(poly.vertices, foot, u, a, b);
        if (worst < -eps)
            rep.saddles.push_back({{a, b}, foot});
        else if (worst <= eps)
            rep.marginal.push_back({"edge", a, b, worst});
    }

    // Faces: stable iff the perpendicular foot of C on the face plane lies
    // strictly inside the oriented cycle.
    for (int fi = 0; fi < poly.face_count(); ++fi) {
        const Face& f = poly.faces[fi];
        Vec3 n = poly.face_normal(fi);
        Vec3 foot = C - ((C - poly.vertices[f[0]]).dot(n)) * n;
        double min_margin = std::numeric_limits<double>::infinity();
        const int m = static_cast<int>(f.size());
        for (int e = 0; e < m; ++e) {
            const Vec3& p = poly.vertices[f[e]];
            const Vec3& q = poly.vertices[f[(e + 1) % m]];
            Vec3 ev = q - p;
            double margin = (ev.cross(foot - p)).dot(n) / ev.norm();
            min_margin = std::min(min_margin, margin);
        }
        if (min_margin > eps)
            rep.stable.push_back({fi, foot});
        else if (min_margin >= -eps)
            rep.marginal.push_back({"face", fi, -1, min_margin});
    }

    rep.S = static_cast<int>(rep.stable.size());
    rep.H = static_cast<int>(rep.saddles.size());
    rep.U = static_cast<int>(rep.unstable.size());
    return rep;
}

EquilibriumReport2D classify_2d(const Polygon2D& poly, const Centroid2D& c, double eps_rel) {
    poly.require_valid();
    const double diam = poly.diameter();
    const double eps = eps_rel * diam;
    const Vec2 C = c.point;
    const int m = poly.vertex_count();

    // Interior check against every edge line.
    for (int i = 0; i < m; ++i) {
        Vec2 e = poly.vertices[(i + 1) % m] - poly.vertices[i];
        if (e.cross(C - poly.vertices[i]) <= eps * e.norm())
            throw ConstructionError("centroid is not strictly inside the polygon");
    }

    EquilibriumReport2D rep;
    rep.centroid = C;
    rep.model = c.model;

    for (int vi = 0; vi < m; ++vi) {
        const Vec2& v = poly.vertices[vi];
        Vec2 u = (v - C).normalized();
        double worst = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < m; ++j) {
            if (j == vi) continue;
            worst = std::max(worst, (poly.vertices[j] - v).dot(u));
        }
        if (worst < -eps)
            rep.unstable.push_back(vi);
        else if (worst <= eps)
            rep.marginal.push_back({"vertex", vi, -1, worst});
    }

    for (int i = 0; i < m; ++i) {
        const Vec2& A = poly.vertices[i];
        const Vec2& B = poly.vertices[(i + 1) % m];
        Vec2 d = B - A;
        double len = d.norm();
        double t = (C - A).dot(d) / d.dot(d);
        double inset = std::min(t, 1.0 - t) * len;
        if (inset <= eps) {
            if (std::abs(inset) <= eps) rep.marginal.push_back({"edge", i, (i + 1) % m, inset});
            continue;
        }
        Vec2 foot = A + t * d;
        Vec2 u = (foot - C).normalized();
        double worst = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < m; ++j) {
            if (j == i || j == (i + 1) % m) continue;
            worst = std::max(worst, (poly.vertices[j] - foot).dot(u));
        }
        if (worst < -eps)
            rep.stable.emplace_back(i, foot);
        else if (worst <= eps)
            rep.marginal.push_back({"edge", i, (i + 1) % m, worst});
    }

    rep.S = static_cast<int>(rep.stable.size());
    rep.U = static_cast<int>(rep.unstable.size());
    return rep;
}

bool tipping_test(const Vec3& xi, const Vec3& xj, double eps) {
    double ni = xi.norm();
    double nj = xj.norm();
    if (ni <= 0.0 || nj <= 0.0)
        throw InvalidParameter("tipping_test: zero vector");
    // |x_i| < |x_j| cos(theta)  <=>  x_i . (x_j - x_i) > 0; normalize by |x_i|
    // so the margin has support-height units.
    return xi.dot(xj - xi) / ni > eps;
}

long long complexity(const EquilibriumReport& report, const Polyhedron& poly) {
    return 2LL * (poly.vertex_count() + poly.face_count() - report.S - report.U);
}

}  // namespace monostatic
