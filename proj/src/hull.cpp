#include "monostatic/hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace monostatic {

namespace {

struct Facet {
    int a, b, c;       // CCW from outside
    Vec3 normal;       // unit
    double offset;     // plane: normal . p = offset
    bool alive = true;
};

double point_scale(const std::vector<Vec3>& pts) {
    Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
    for (const Vec3& p : pts) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
    return (hi - lo).norm();
}

}  // namespace

HullResult convex_hull(const std::vector<Vec3>& points, const HullOptions& opts) {
    const int N = static_cast<int>(points.size());
    if (N < 4) throw ConstructionError("convex_hull: need at least 4 points");
    const double scale = point_scale(points);
    if (scale <= 0.0) throw ConstructionError("convex_hull: all points coincide");
    const double eps = 1e-12 * scale;       // strict-visibility threshold
    const double feed_eps = 1e-9 * scale;   // initial simplex degeneracy threshold

    // Initial simplex: two extremes along x (fall back to any separated pair),
    // then farthest from their line, then farthest from the plane.
    int i0 = 0, i1 = 0;
    {
        double best = -1.0;
        for (int d = 0; d < 3; ++d) {
            int lo = 0, hi = 0;
            for (int i = 1; i < N; ++i) {
                if (points[i][d] < points[lo][d]) lo = i;
                if (points[i][d] > points[hi][d]) hi = i;
            }
            double sep = dist(points[lo], points[hi]);
            if (sep > best) { best = sep; i0 = lo; i1 = hi; }
        }
        if (best < feed_eps) throw ConstructionError("convex_hull: degenerate point set");
    }
    int i2 = -1;
    {
        double best = -1.0;
        Vec3 d = (points[i1] - points[i0]).normalized();
        for (int i = 0; i < N; ++i) {
            Vec3 rel = points[i] - points[i0];
            double off = (rel - d * rel.dot(d)).norm();
            if (off > best) { best = off; i2 = i; }
        }
        if (best < feed_eps) throw ConstructionError("convex_hull: points are collinear");
    }
    int i3 = -1;
    {
        Vec3 n = (points[i1] - points[i0]).cross(points[i2] - points[i0]).normalized();
        double best = -1.0;
        for (int i = 0; i < N; ++i) {
            double off = std::abs((points[i] - points[i0]).dot(n));
            if (off > best) { best = off; i3 = i; }
        }
        if (best < feed_eps) throw ConstructionError("convex_hull: points are coplanar");
    }

    std::vector<Facet> facets;
    auto push_facet = [&](int a, int b, int c) {
        Vec3 raw = (points[b] - points[a]).cross(points[c] - points[a]);
        if (raw.norm() <= 1e-20 * scale * scale)
            throw ConstructionError("convex_hull: degenerate facet encountered");
        Facet f;
        f.a = a; f.b = b; f.c = c;
        f.normal = raw.normalized();
        f.offset = f.normal.dot(points[a]);
        facets.push_back(f);
    };
    {
        // Orient the simplex so all facets face away from its centroid.
        Vec3 cen = (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;
        int tri[4][3] = {{i0, i1, i2}, {i0, i1, i3}, {i0, i2, i3}, {i1, i2, i3}};
        for (auto& t : tri) {
            Vec3 n = (points[t[1]] - points[t[0]]).cross(points[t[2]] - points[t[0]]);
            if (n.dot(points[t[0]] - cen) < 0.0) std::swap(t[1], t[2]);
            push_facet(t[0], t[1], t[2]);
        }
    }

    for (int p = 0; p < N; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        // Visible facets.
        std::vector<int> visible;
        for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
            if (!facets[fi].alive) continue;
            if (facets[fi].normal.dot(points[p]) - facets[fi].offset > eps)
                visible.push_back(fi);
        }
        if (visible.empty()) continue;

        // Horizon: directed edges of visible facets whose reverse belongs to
        // a hidden facet.
        std::set<std::pair<int, int>> vis_edges;
        for (int fi : visible) {
            const Facet& f = facets[fi];
            vis_edges.insert({f.a, f.b});
            vis_edges.insert({f.b, f.c});
            vis_edges.insert({f.c, f.a});
        }
        std::map<int, int> horizon_next;
        std::size_t horizon_count = 0;
        for (const auto& e : vis_edges)
            if (!vis_edges.count({e.second, e.first})) {
                horizon_next[e.first] = e.second;
                ++horizon_count;
            }
        if (horizon_next.size() != horizon_count || horizon_next.empty())
            throw ConstructionError("convex_hull: horizon is not a simple cycle");
        // Walk the loop; a disconnected horizon would leave edges unconsumed.
        std::vector<std::pair<int, int>> horizon;
        int start = horizon_next.begin()->first;
        int cur = start;
        do {
            auto it = horizon_next.find(cur);
            if (it == horizon_next.end())
                throw ConstructionError("convex_hull: horizon walk broke");
            horizon.emplace_back(cur, it->second);
            cur = it->second;
        } while (cur != start && horizon.size() <= horizon_count);
        if (cur != start || horizon.size() != horizon_count)
            throw ConstructionError("convex_hull: horizon is disconnected");

        for (int fi : visible) facets[fi].alive = false;
        for (const auto& e : horizon) push_facet(e.first, e.second, p);
    }

    // Compact to live facets and drop duplicate vertices references.
    std::vector<Facet> live;
    for (const Facet& f : facets)
        if (f.alive) live.push_back(f);

    // Merge coplanar neighbouring facets (union-find over shared edges).
    const double merge_tol = opts.merge_tol_rel * scale;
    std::vector<int> parent(live.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::pair<int, int>, int> edge_owner;
    auto consider = [&](int u, int v, int fi) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = edge_owner.find(key);
        if (it == edge_owner.end()) {
            edge_owner[key] = fi;
            return;
        }
        int fj = it->second;
        const Facet& A = live[fi];
        const Facet& B = live[fj];
        if (A.normal.dot(B.normal) > 1.0 - 1e-6 &&
            std::abs(A.offset - B.offset) < merge_tol) {
            // Same supporting plane within tolerance: verify each facet's
            // vertices sit on the other's plane before merging.
            auto on_plane = [&](const Facet& F, const Facet& G) {
                for (int v : {F.a, F.b, F.c})
                    if (std::abs(G.normal.dot(points[v]) - G.offset) > merge_tol) return false;
                return true;
            };
            if (on_plane(A, B) && on_plane(B, A)) parent[find(fi)] = find(fj);
        }
    };
    for (std::size_t fi = 0; fi < live.size(); ++fi) {
        consider(live[fi].a, live[fi].b, static_cast<int>(fi));
        consider(live[fi].b, live[fi].c, static_cast<int>(fi));
        consider(live[fi].c, live[fi].a, static_cast<int>(fi));
    }

    std::map<int, std::vector<int>> groups;
    for (std::size_t fi = 0; fi < live.size(); ++fi)
        groups[find(static_cast<int>(fi))].push_back(static_cast<int>(fi));

    HullResult result;
    std::set<int> on_hull;
    for (const auto& [root, members] : groups) {
        (void)root;
        // Boundary cycle of the merged group: directed edges used exactly once.
        std::map<int, int> next;
        std::set<std::pair<int, int>> dir;
        for (int fi : members) {
            const Facet& f = live[fi];
            dir.insert({f.a, f.b});
            dir.insert({f.b, f.c});
            dir.insert({f.c, f.a});
        }
        std::size_t boundary_edges = 0;
        for (const auto& e : dir)
            if (!dir.count({e.second, e.first})) {
                next[e.first] = e.second;
                ++boundary_edges;
            }
        if (next.empty()) throw ConstructionError("convex_hull: merged facet group has no boundary");
        if (next.size() != boundary_edges)
            throw ConstructionError("convex_hull: merged facet boundary is not simple");
        Face cycle;
        int start = next.begin()->first;
        int cur = start;
        do {
            cycle.push_back(cur);
            auto it = next.find(cur);
            if (it == next.end())
                throw ConstructionError("convex_hull: merged facet boundary is not a cycle");
            cur = it->second;
        } while (cur != start && cycle.size() <= next.size());
        if (cur != start)
            throw ConstructionError("convex_hull: merged facet boundary is not a single cycle");
        result.faces.push_back(cycle);
        for (int v : cycle) on_hull.insert(v);
    }

    result.hull_vertices.assign(on_hull.begin(), on_hull.end());
    return result;
}

Polyhedron HullResult::to_polyhedron(const std::vector<Vec3>& points) const {
    Polyhedron poly;
    std::map<int, int> remap;
    for (int v : hull_vertices) {
        remap[v] = static_cast<int>(poly.vertices.size());
        poly.vertices.push_back(points[v]);
    }
    for (const Face& f : faces) {
        Face g;
        g.reserve(f.size());
        for (int v : f) g.push_back(remap.at(v));
        poly.faces.push_back(std::move(g));
    }
    return poly;
}

bool same_face_lattice(const Polyhedron& a, const Polyhedron& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.face_count() != b.face_count()) return false;
    auto canon = [](const Polyhedron& p) {
        std::vector<Face> cycles = p.faces;
        for (Face& f : cycles) {
            auto it = std::min_element(f.begin(), f.end());
            std::rotate(f.begin(), it, f.end());
        }
        std::sort(cycles.begin(), cycles.end());
        return cycles;
    };
    return canon(a) == canon(b);
}

}  // namespace monostatic
