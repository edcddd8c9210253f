#include "monostatic/mass.hpp"

#include <cmath>
#include <stdexcept>

namespace monostatic {

MassModel mass_model_from_string(const std::string& name) {
    if (name == "vertex") return MassModel::Vertex;
    if (name == "edge") return MassModel::Edge;
    if (name == "face") return MassModel::Face;
    if (name == "solid") return MassModel::Solid;
    throw InvalidParameter("unknown mass model: " + name);
}

std::string to_string(MassModel model) {
    switch (model) {
        case MassModel::Vertex: return "vertex";
        case MassModel::Edge: return "edge";
        case MassModel::Face: return "face";
        case MassModel::Solid: return "solid";
    }
    return "?";
}

Centroid centroid(const Polyhedron& poly, MassModel model) {
    Centroid out;
    out.model = model;
    switch (model) {
        case MassModel::Vertex: {
            Vec3 acc{0, 0, 0};
            for (const Vec3& v : poly.vertices) acc += v;
            out.mass = static_cast<double>(poly.vertices.size());
            out.point = acc / out.mass;
            break;
        }
        case MassModel::Edge: {
            Vec3 acc{0, 0, 0};
            double total = 0.0;
            for (const auto& [a, b] : poly.edges()) {
                double len = dist(poly.vertices[a], poly.vertices[b]);
                total += len;
                acc += len * 0.5 * (poly.vertices[a] + poly.vertices[b]);
            }
            if (total <= 0.0) throw ConstructionError("edge skeleton has zero length");
            out.mass = total;
            out.point = acc / total;
            break;
        }
        case MassModel::Face: {
            Vec3 acc{0, 0, 0};
            double total = 0.0;
            for (const Face& f : poly.faces) {
                const Vec3& p0 = poly.vertices[f[0]];
                for (std::size_t t = 1; t + 1 < f.size(); ++t) {
                    const Vec3& p1 = poly.vertices[f[t]];
                    const Vec3& p2 = poly.vertices[f[t + 1]];
                    double area = 0.5 * (p1 - p0).cross(p2 - p0).norm();
                    total += area;
                    acc += area * (p0 + p1 + p2) / 3.0;
                }
            }
            if (total <= 0.0) throw ConstructionError("face skeleton has zero area");
            out.mass = total;
            out.point = acc / total;
            break;
        }
        case MassModel::Solid: {
            Vec3 acc{0, 0, 0};
            double total6 = 0.0;
            for (const Face& f : poly.faces) {
                const Vec3& p0 = poly.vertices[f[0]];
                for (std::size_t t = 1; t + 1 < f.size(); ++t) {
                    const Vec3& p1 = poly.vertices[f[t]];
                    const Vec3& p2 = poly.vertices[f[t + 1]];
                    double v6 = p0.dot(p1.cross(p2));  // 6x signed tet volume
                    total6 += v6;
                    acc += v6 * (p0 + p1 + p2) / 4.0;  // tet centroid incl. origin
                }
            }
            if (std::abs(total6) <= 0.0) throw ConstructionError("solid has zero volume");
            out.mass = total6 / 6.0;
            out.point = acc / total6;
            break;
        }
    }
    return out;
}

Centroid2D centroid(const Polygon2D& poly, MassModel model) {
    Centroid2D out;
    out.model = model;
    const int m = poly.vertex_count();
    switch (model) {
        case MassModel::Vertex: {
            Vec2 acc{0, 0};
            for (const Vec2& v : poly.vertices) acc += v;
            out.mass = static_cast<double>(m);
            out.point = acc / out.mass;
            break;
        }
        case MassModel::Edge: {
            Vec2 acc{0, 0};
            double total = 0.0;
            for (int i = 0; i < m; ++i) {
                const Vec2& a = poly.vertices[i];
                const Vec2& b = poly.vertices[(i + 1) % m];
                double len = dist(a, b);
                total += len;
                acc += len * 0.5 * (a + b);
            }
            if (total <= 0.0) throw ConstructionError("perimeter has zero length");
            out.mass = total;
            out.point = acc / total;
            break;
        }
        case MassModel::Face:
        case MassModel::Solid: {
            // Homogeneous disc: shoelace area centroid.
            double a2 = 0.0;
            Vec2 acc{0, 0};
            for (int i = 0; i < m; ++i) {
                const Vec2& p = poly.vertices[i];
                const Vec2& q = poly.vertices[(i + 1) % m];
                double cr = p.cross(q);
                a2 += cr;
                acc += cr * (p + q);
            }
            if (std::abs(a2) <= 0.0) throw ConstructionError("polygon has zero area");
            out.mass = 0.5 * a2;
            out.point = acc / (3.0 * a2);
            break;
        }
    }
    return out;
}

ZcClosedForm zc_closed_form(const SpiralParams& params) {
    params.require_valid();
    const SpiralProfile prof = profile(params);
    const double sn = prof.sum_z();
    const double denom = 1.0 + static_cast<double>(params.k) * params.n;
    ZcClosedForm out;
    out.uncorrected = (1.0 + params.k * sn) / denom;
    if (params.k >= 3) {
        double sn_ast = sn + apex_lift(params.alphas[0], params.k) / params.k;
        out.corrected = (1.0 + params.k * sn_ast) / denom;
    } else {
        out.corrected = out.uncorrected;
    }
    return out;
}

Vec3 balance_residual(const std::vector<Vec3>& points, const std::vector<double>& masses) {
    if (points.empty() || points.size() != masses.size())
        throw InvalidParameter("balance_residual: points and masses must be non-empty and equal length");
    double total = 0.0;
    Vec3 weighted{0, 0, 0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (masses[i] < 0.0) throw InvalidParameter("balance_residual: negative mass");
        total += masses[i];
        weighted += masses[i] * points[i];
    }
    if (total <= 0.0) throw InvalidParameter("balance_residual: total mass must be positive");
    Vec3 c = weighted / total;
    Vec3 residual{0, 0, 0};
    for (std::size_t i = 0; i < points.size(); ++i) residual += masses[i] * (points[i] - c);
    return residual;
}

}  // namespace monostatic
