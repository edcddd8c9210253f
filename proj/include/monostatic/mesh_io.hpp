// Mesh exchange: JSON ({"vertices": [[x,y,z],...], "faces": [[i,...],...]},
// 0-based CCW-outside cycles) and OBJ (v/f records, 1-based). Planar
// polygons serialize as JSON with 2-component vertices.
#pragma once

#include <string>
#include <variant>

#include "monostatic/equilibrium.hpp"
#include "monostatic/polyhedron.hpp"

namespace monostatic {

std::string to_json(const Polyhedron& poly);
std::string to_json(const Polygon2D& poly);
std::string to_obj(const Polyhedron& poly);

using Mesh = std::variant<Polyhedron, Polygon2D>;

// Detects 2- vs 3-component vertices. Throws InvalidParameter on schema
// errors. A JSON mesh without "faces" is hulled by the caller.
Mesh mesh_from_json(const std::string& text);

Polyhedron polyhedron_from_obj(const std::string& text);

// Report JSON per the published schema: model, S/H/U, stable/saddles feet,
// unstable ids, marginal items, complexity.
std::string report_to_json(const EquilibriumReport& rep, const Polyhedron& poly);
std::string report_to_json(const EquilibriumReport2D& rep, const Polygon2D& poly);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace monostatic
