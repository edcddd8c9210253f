#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "monostatic/build.hpp"
#include "monostatic/equilibrium.hpp"
#include "monostatic/fixtures.hpp"
#include "monostatic/hull.hpp"
#include "monostatic/mesh_io.hpp"

#include <json.hpp>

using namespace monostatic;

TEST_CASE("JSON mesh round trip preserves vertices and faces exactly") {
    KSpiralBuild b = build_k_spiral(table1()[2].params());
    std::string text = to_json(b.poly);
    Mesh mesh = mesh_from_json(text);
    REQUIRE(std::holds_alternative<Polyhedron>(mesh));
    const Polyhedron& back = std::get<Polyhedron>(mesh);
    REQUIRE(back.vertex_count() == b.poly.vertex_count());
    for (int i = 0; i < back.vertex_count(); ++i)
        CHECK(dist(back.vertices[i], b.poly.vertices[i]) == 0.0);
    CHECK(back.faces == b.poly.faces);
}

TEST_CASE("OBJ round trip re-imports vertices within 1e-9") {
    KSpiralBuild b = build_k_spiral(table1()[1].params());
    Polyhedron back = polyhedron_from_obj(to_obj(b.poly));
    REQUIRE(back.vertex_count() == b.poly.vertex_count());
    for (int i = 0; i < back.vertex_count(); ++i)
        CHECK(dist(back.vertices[i], b.poly.vertices[i]) < 1e-9);
    CHECK(back.faces == b.poly.faces);
}

TEST_CASE("round trip through JSON gives an identical classification") {
    KSpiralBuild b = build_k_spiral(table1()[2].params());
    EquilibriumReport direct = classify(b.poly, centroid(b.poly, MassModel::Vertex));

    Mesh mesh = mesh_from_json(to_json(b.poly));
    const Polyhedron& back = std::get<Polyhedron>(mesh);
    EquilibriumReport loaded = classify(back, centroid(back, MassModel::Vertex));

    CHECK(direct.S == loaded.S);
    CHECK(direct.H == loaded.H);
    CHECK(direct.U == loaded.U);
    CHECK(direct.unstable == loaded.unstable);
    REQUIRE(direct.stable.size() == loaded.stable.size());
    for (std::size_t i = 0; i < direct.stable.size(); ++i) {
        CHECK(direct.stable[i].face == loaded.stable[i].face);
        CHECK(dist(direct.stable[i].foot, loaded.stable[i].foot) < 1e-12);
    }
}

TEST_CASE("2D polygon JSON round trip") {
    Polygon2D poly = build_double_spiral(table1()[5].params());
    Mesh mesh = mesh_from_json(to_json(poly));
    REQUIRE(std::holds_alternative<Polygon2D>(mesh));
    const Polygon2D& back = std::get<Polygon2D>(mesh);
    REQUIRE(back.vertex_count() == poly.vertex_count());
    for (int i = 0; i < back.vertex_count(); ++i)
        CHECK(dist(back.vertices[i], poly.vertices[i]) == 0.0);
}

TEST_CASE("report JSON carries the published schema fields") {
    KSpiralBuild b = build_k_spiral(table1()[2].params());
    EquilibriumReport rep = classify(b.poly, centroid(b.poly, MassModel::Vertex));
    nlohmann::json j = nlohmann::json::parse(report_to_json(rep, b.poly));
    CHECK(j["model"] == "vertex");
    CHECK(j["S"] == 1);
    CHECK(j["H"] == 0);
    CHECK(j["U"] == 1);
    CHECK(j["complexity"] == 80);
    REQUIRE(j["stable"].size() == 1);
    CHECK(j["stable"][0].contains("face"));
    CHECK(j["stable"][0]["foot"].size() == 3);
    CHECK(j["unstable"].size() == 1);
    CHECK(j["marginal"].empty());
}

TEST_CASE("malformed mesh JSON is rejected") {
    CHECK_THROWS_AS(mesh_from_json("{"), InvalidParameter);
    CHECK_THROWS_AS(mesh_from_json("{}"), InvalidParameter);
    CHECK_THROWS_AS(mesh_from_json(R"({"vertices": [[1, 2, 3, 4]]})"), InvalidParameter);
    CHECK_THROWS_AS(mesh_from_json(R"({"vertices": [[1,2,3],[1,2]]})"), InvalidParameter);
}

TEST_CASE("faceless JSON point clouds round trip through the hull") {
    const Table2Block& block = table2()[0];
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Vec3& p : block.points) j["vertices"].push_back({p.x, p.y, p.z});
    Mesh mesh = mesh_from_json(j.dump());
    const Polyhedron& cloud = std::get<Polyhedron>(mesh);
    CHECK(cloud.faces.empty());
    Polyhedron hulled = convex_hull(cloud.vertices).to_polyhedron(cloud.vertices);
    CHECK(hulled.invalid_reason().empty());
    CHECK(hulled.vertex_count() == 12);
}
