#include "monostatic/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace monostatic {

std::vector<std::pair<int, int>> Polyhedron::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const Face& f : faces) {
        const int m = static_cast<int>(f.size());
        for (int a = 0; a < m; ++a) {
            int u = f[a], v = f[(a + 1) % m];
            out.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double Polyhedron::diameter() const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            d2 = std::max(d2, (vertices[i] - vertices[j]).norm2());
    return std::sqrt(d2);
}

Vec3 Polyhedron::face_normal(int fi) const {
    const Face& f = faces[fi];
    Vec3 n{0, 0, 0};
    const int m = static_cast<int>(f.size());
    for (int a = 0; a < m; ++a) {
        const Vec3& p = vertices[f[a]];
        const Vec3& q = vertices[f[(a + 1) % m]];
        n.x += (p.y - q.y) * (p.z + q.z);
        n.y += (p.z - q.z) * (p.x + q.x);
        n.z += (p.x - q.x) * (p.y + q.y);
    }
    return n.normalized();
}

Vec3 Polyhedron::face_centroid(int fi) const {
    Vec3 c{0, 0, 0};
    for (int v : faces[fi]) c += vertices[v];
    return c / static_cast<double>(faces[fi].size());
}

std::string Polyhedron::invalid_reason() const {
    const int V = vertex_count();
    const int F = face_count();
    if (V < 4) return "fewer than 4 vertices";
    if (F < 4) return "fewer than 4 faces";
    for (int fi = 0; fi < F; ++fi) {
        if (faces[fi].size() < 3) return "face " + std::to_string(fi) + " has fewer than 3 vertices";
        for (int v : faces[fi])
            if (v < 0 || v >= V) return "face " + std::to_string(fi) + " references vertex " + std::to_string(v);
    }

    // Closed 2-manifold: every directed edge appears exactly once, and its
    // opposite exactly once.
    std::map<std::pair<int, int>, int> directed;
    for (const Face& f : faces) {
        const int m = static_cast<int>(f.size());
        for (int a = 0; a < m; ++a) {
            auto key = std::make_pair(f[a], f[(a + 1) % m]);
            if (++directed[key] > 1)
                return "directed edge (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ") repeated";
        }
    }
    for (const auto& [key, cnt] : directed) {
        (void)cnt;
        if (!directed.count({key.second, key.first}))
            return "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") not shared by two faces";
    }

    const int E = static_cast<int>(directed.size()) / 2;
    if (V - E + F != 2)
        return "Euler characteristic V-E+F = " + std::to_string(V - E + F) + " (expected 2)";

    const double diam = diameter();
    const double planar_tol = 1e-8 * diam;
    const double convex_tol = 1e-9 * diam;

    for (int fi = 0; fi < F; ++fi) {
        const Vec3 n = face_normal(fi);
        const Vec3& a = vertices[faces[fi][0]];
        for (int v : faces[fi]) {
            double off = std::abs((vertices[v] - a).dot(n));
            if (off > planar_tol)
                return "face " + std::to_string(fi) + " not planar: vertex " + std::to_string(v) +
                       " offset " + std::to_string(off);
        }
        for (int v = 0; v < V; ++v) {
            double side = (vertices[v] - a).dot(n);
            if (side > convex_tol)
                return "convexity violated: vertex " + std::to_string(v) + " lies " +
                       std::to_string(side) + " outside face " + std::to_string(fi);
        }
    }

    // Every listed vertex is extreme: it has a supporting plane, which for a
    // convex polyhedron means it belongs to some face.
    std::vector<char> used(V, 0);
    for (const Face& f : faces)
        for (int v : f) used[v] = 1;
    for (int v = 0; v < V; ++v)
        if (!used[v]) return "vertex " + std::to_string(v) + " not on any face (not extreme)";

    return {};
}

void Polyhedron::require_valid() const {
    std::string reason = invalid_reason();
    if (!reason.empty()) throw ConstructionError(reason);
}

double Polygon2D::diameter() const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            Vec2 d = vertices[i] - vertices[j];
            d2 = std::max(d2, d.dot(d));
        }
    return std::sqrt(d2);
}

double Polygon2D::signed_area() const {
    double a = 0.0;
    const int m = vertex_count();
    for (int i = 0; i < m; ++i) a += vertices[i].cross(vertices[(i + 1) % m]);
    return 0.5 * a;
}

std::string Polygon2D::invalid_reason() const {
    const int m = vertex_count();
    if (m < 3) return "fewer than 3 vertices";
    if (signed_area() <= 0.0) return "not counter-clockwise";
    const double tol = 1e-12 * diameter() * diameter();
    for (int i = 0; i < m; ++i) {
        Vec2 e1 = vertices[(i + 1) % m] - vertices[i];
        Vec2 e2 = vertices[(i + 2) % m] - vertices[(i + 1) % m];
        if (e1.cross(e2) <= tol)
            return "not strictly convex at vertex " + std::to_string((i + 1) % m);
    }
    return {};
}

void Polygon2D::require_valid() const {
    std::string reason = invalid_reason();
    if (!reason.empty()) throw ConstructionError(reason);
}

}  // namespace monostatic
