#include "monostatic/monotonic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "monostatic/spiral.hpp"

namespace monostatic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kCircleSamples = 1440;
constexpr int kEdgeSamples = 96;

struct Frame {
    // Rotation taking the axis direction to +z; applied to C-centered points.
    Vec3 ex, ey, ez;
    Vec3 apply(const Vec3& p) const { return {p.dot(ex), p.dot(ey), p.dot(ez)}; }
};

Frame make_frame(const Vec3& axis) {
    Frame f;
    f.ez = axis.normalized();
    Vec3 ref = std::abs(f.ez.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    f.ex = f.ez.cross(ref).normalized();
    f.ey = f.ez.cross(f.ex);
    return f;
}

bool inside_face(const std::vector<Vec3>& verts, const Face& f, const Vec3& n, const Vec3& p,
                 double eps) {
    const int m = static_cast<int>(f.size());
    for (int a = 0; a < m; ++a) {
        Vec3 ev = verts[f[(a + 1) % m]] - verts[f[a]];
        if (ev.cross(p - verts[f[a]]).dot(n) < eps * ev.norm()) return false;
    }
    return true;
}

}  // namespace

MonotonicityResult radial_monotonicity(const Polyhedron& poly, const Vec3& centroid,
                                       const Vec3& axis) {
    poly.require_valid();
    if (axis.norm() <= 0.0) throw InvalidParameter("radial_monotonicity: zero axis");

    const double diam = poly.diameter();
    const double eps = 1e-9 * diam;

    // Work in C-centered coordinates with the axis along +z.
    const Frame fr = make_frame(axis);
    std::vector<Vec3> W(poly.vertices.size());
    for (std::size_t i = 0; i < W.size(); ++i) W[i] = fr.apply(poly.vertices[i] - centroid);

    // C must be interior (which also guarantees the axis meets the body).
    for (int fi = 0; fi < poly.face_count(); ++fi) {
        Vec3 n{0, 0, 0};
        const Face& f = poly.faces[fi];
        const int m = static_cast<int>(f.size());
        for (int a = 0; a < m; ++a) {
            const Vec3& p = W[f[a]];
            const Vec3& q = W[f[(a + 1) % m]];
            n.x += (p.y - q.y) * (p.z + q.z);
            n.y += (p.z - q.z) * (p.x + q.x);
            n.z += (p.x - q.x) * (p.y + q.y);
        }
        n = n.normalized();
        if (W[f[0]].dot(n) <= eps)
            throw ConstructionError("radial_monotonicity: centroid not strictly inside");
    }

    MonotonicityResult res;
    res.monotone = true;

    // Face test: the perpendicular-foot locus within the face plane is the
    // circle with diameter [F_f, A_f]; any locus point interior to the face
    // (and off the axis) is an interior extremum of r along its meridian.
    std::vector<Vec3> normals(poly.face_count());
    for (int fi = 0; fi < poly.face_count(); ++fi) {
        const Face& f = poly.faces[fi];
        Vec3 n{0, 0, 0};
        const int m = static_cast<int>(f.size());
        for (int a = 0; a < m; ++a) {
            const Vec3& p = W[f[a]];
            const Vec3& q = W[f[(a + 1) % m]];
            n.x += (p.y - q.y) * (p.z + q.z);
            n.y += (p.z - q.z) * (p.x + q.x);
            n.z += (p.x - q.x) * (p.y + q.y);
        }
        normals[fi] = n.normalized();
    }

    for (int fi = 0; fi < poly.face_count() && res.monotone; ++fi) {
        const Face& f = poly.faces[fi];
        const Vec3& n = normals[fi];
        const double d = W[f[0]].dot(n);  // distance from C to the plane, > 0
        const Vec3 foot = d * n;

        if (std::abs(n.z) < 1e-12) {
            // Plane parallel to the axis: section lines are vertical, feet
            // locus is the horizontal in-plane line through the foot. Face
            // points lie within 2 diameters of the foot.
            Vec3 t = n.cross(Vec3{0, 0, 1}).normalized();
            for (int s = 0; s <= 2 * kCircleSamples && res.monotone; ++s) {
                double lam = (2.0 * s / kCircleSamples - 2.0) * diam;
                Vec3 p = foot + lam * t;
                if (std::hypot(p.x, p.y) <= eps) continue;
                if (inside_face(W, f, n, p, eps)) {
                    res.monotone = false;
                    res.witness = "face " + std::to_string(fi) +
                                  " contains an interior meridian extremum (axis-parallel face)";
                }
            }
            continue;
        }

        const Vec3 pierce{0.0, 0.0, d / n.z};  // axis hits the face plane here
        const Vec3 center = 0.5 * (foot + pierce);
        const double radius = 0.5 * (foot - pierce).norm();
        if (radius <= eps) continue;  // foot on the axis: chords start at their minimum

        Vec3 e1 = (foot - pierce).normalized();
        Vec3 e2 = n.cross(e1);
        for (int s = 0; s < kCircleSamples && res.monotone; ++s) {
            double th = 2.0 * kPi * s / kCircleSamples;
            Vec3 p = center + radius * (std::cos(th) * e1 + std::sin(th) * e2);
            if (std::hypot(p.x, p.y) <= eps) continue;
            if (inside_face(W, f, n, p, eps)) {
                res.monotone = false;
                res.witness = "face " + std::to_string(fi) +
                              " contains an interior meridian extremum";
            }
        }
    }

    if (!res.monotone) return res;

    // Edge test: the meridian derivative of r must keep its sign across each
    // edge crossing.
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int fi = 0; fi < poly.face_count(); ++fi) {
        const Face& f = poly.faces[fi];
        const int m = static_cast<int>(f.size());
        for (int a = 0; a < m; ++a) {
            int u = f[a], v = f[(a + 1) % m];
            edge_faces[{std::min(u, v), std::max(u, v)}].push_back(fi);
        }
    }

    for (const auto& [e, adj] : edge_faces) {
        if (adj.size() != 2) continue;
        for (int s = 1; s < kEdgeSamples; ++s) {
            Vec3 q = W[e.first] + (W[e.second] - W[e.first]) * (static_cast<double>(s) / kEdgeSamples);
            double rho = std::hypot(q.x, q.y);
            if (rho <= eps) continue;
            double R = q.norm();
            // In-meridian tangent toward increasing polar angle.
            Vec3 u_theta{q.z * q.x / rho / R, q.z * q.y / rho / R, -rho / R};
            Vec3 mnorm = Vec3{-q.y, q.x, 0.0}.normalized();  // meridian plane normal
            double deriv[2];
            bool grazing = false;
            for (int si = 0; si < 2; ++si) {
                Vec3 t = normals[adj[si]].cross(mnorm);
                double tn = t.norm();
                if (tn <= 1e-12) { grazing = true; break; }
                t = t / tn;
                if (t.dot(u_theta) < 0.0) t = -t;
                deriv[si] = q.dot(t);
            }
            if (grazing) continue;
            if (deriv[0] * deriv[1] < 0.0) {
                return {false, "meridian derivative flips across edge (" +
                                   std::to_string(e.first) + "," + std::to_string(e.second) + ")"};
            }
        }
    }

    return res;
}

}  // namespace monostatic
