// Convex polyhedron and polygon containers with the validation the rest of
// the toolkit relies on: closed 2-manifold topology, Euler count, face
// planarity, convexity, and extremality of every listed vertex.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monostatic/geom.hpp"

namespace monostatic {

class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

using Face = std::vector<int>;

struct Polyhedron {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;  // index cycles, counter-clockwise seen from outside

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    // Undirected edge list (a < b), sorted, deduplicated.
    std::vector<std::pair<int, int>> edges() const;

    // Largest pairwise vertex distance.
    double diameter() const;

    // Unit outward normal by Newell's method (faces are CCW from outside).
    Vec3 face_normal(int f) const;
    Vec3 face_centroid(int f) const;

    // Empty string when all polyhedron invariants hold.
    //   planarity tolerance: 1e-8 x diameter
    //   convexity slack:     1e-9 x diameter
    std::string invalid_reason() const;
    void require_valid() const;
};

struct Polygon2D {
    std::vector<Vec2> vertices;  // cyclic, counter-clockwise

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    double diameter() const;
    double signed_area() const;

    std::string invalid_reason() const;  // strict convexity, CCW orientation
    void require_valid() const;
};

}  // namespace monostatic
