#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "monostatic/build.hpp"
#include "monostatic/fixtures.hpp"
#include "monostatic/hull.hpp"

using namespace monostatic;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("row 3 build: 21 vertices, 21 faces, Euler 2") {
    KSpiralBuild b = build_k_spiral(table1()[2].params());
    CHECK(b.poly.vertex_count() == 21);
    CHECK(b.poly.face_count() == 21);
    CHECK(b.poly.edges().size() == 40);
    CHECK(b.warnings.empty());
    CHECK(b.apex_height == doctest::Approx(1.4417182).epsilon(1e-5));
}

TEST_CASE("row 2 build: 25 vertices, 25 faces") {
    KSpiralBuild b = build_k_spiral(table1()[1].params());
    CHECK(b.poly.vertex_count() == 25);
    CHECK(b.poly.face_count() == 25);
}

TEST_CASE("every 3D table row builds a valid polyhedron with v = kn+1") {
    for (const Table1Row& row : table1()) {
        if (row.k < 3) continue;
        KSpiralBuild b = build_k_spiral(row.params());
        CHECK(b.poly.vertex_count() == row.k * row.n + 1);
        CHECK(b.poly.face_count() == row.k * row.n + 1);
        CHECK(b.poly.vertex_count() == row.v);
        CHECK(b.poly.invalid_reason().empty());
    }
}

TEST_CASE("built vertex set is invariant under rotation by 2 pi / k") {
    KSpiralBuild b = build_k_spiral(table1()[2].params());
    const int k = 5;
    const double c = std::cos(2 * kPi / k), s = std::sin(2 * kPi / k);
    for (const Vec3& v : b.poly.vertices) {
        Vec3 rot{c * v.x - s * v.y, s * v.x + c * v.y, v.z};
        double best = 1e300;
        for (const Vec3& w : b.poly.vertices) best = std::min(best, dist(rot, w));
        CHECK(best < 1e-12);
    }
}

TEST_CASE("independent hull reconstruction reproduces the face lattice") {
    for (const Table1Row& row : table1()) {
        if (row.k < 3) continue;
        KSpiralBuild b = build_k_spiral(row.params());
        HullResult hull = convex_hull(b.poly.vertices);
        CHECK(static_cast<int>(hull.hull_vertices.size()) == b.poly.vertex_count());
        Polyhedron hp = hull.to_polyhedron(b.poly.vertices);
        CHECK(same_face_lattice(b.poly, hp));
    }
}

TEST_CASE("row 5 build warns about its non-outwards level") {
    KSpiralBuild b = build_k_spiral(table1()[4].params());
    REQUIRE(b.warnings.size() == 1);
    CHECK(b.warnings[0].find("level 1") != std::string::npos);
}

TEST_CASE("k = 2 is rejected by the 3D builder and routed to the 2D path") {
    SpiralParams p = table1()[5].params();
    CHECK_THROWS_AS(build_k_spiral(p), InvalidParameter);
    Polygon2D poly = build_double_spiral(p);
    CHECK(poly.vertex_count() == 11);
}

TEST_CASE("row 6 defines the mirror-symmetric 11-gon") {
    Polygon2D poly = build_double_spiral(table1()[5].params());
    REQUIRE(poly.vertex_count() == 11);
    CHECK(poly.invalid_reason().empty());
    CHECK(poly.vertices[0].x == doctest::Approx(0.0));
    CHECK(poly.vertices[0].y == doctest::Approx(1.0));
    // Mirror symmetry: for each vertex, (-x, z) is also a vertex.
    for (const Vec2& v : poly.vertices) {
        double best = 1e300;
        for (const Vec2& w : poly.vertices) best = std::min(best, dist(Vec2{-v.x, v.y}, w));
        CHECK(best < 1e-12);
    }
}

TEST_CASE("classical n=3 double spiral is a convex 7-gon") {
    Polygon2D poly = build_double_spiral(classical_spiral(3));
    CHECK(poly.vertex_count() == 7);
    CHECK(poly.invalid_reason().empty());
    CHECK(poly.signed_area() > 0.0);
}

TEST_CASE("random valid angle vectors build hull-consistent polyhedra") {
    std::mt19937 rng(60613);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    int built = 0;
    while (built < 40) {
        int n = 2 + static_cast<int>(rng() % 5);
        int k = 3 + static_cast<int>(rng() % 7);
        std::vector<double> a(static_cast<std::size_t>(n) + 1);
        double sum = 0;
        for (double& v : a) { v = u(rng); sum += v; }
        for (double& v : a) v *= kPi / sum;
        SpiralParams p;
        p.n = n;
        p.k = k;
        p.alphas = a;
        if (!p.valid()) continue;
        KSpiralBuild b;
        try {
            b = build_k_spiral(p);
        } catch (const ConstructionError&) {
            // Some angle sequences are valid spirals but do not close into a
            // convex D_k arrangement; the builder must refuse those.
            continue;
        }
        CHECK(b.poly.vertex_count() == k * n + 1);
        CHECK(static_cast<int>(b.poly.edges().size()) == 2 * k * n);
        HullResult hull = convex_hull(b.poly.vertices);
        CHECK(same_face_lattice(b.poly, hull.to_polyhedron(b.poly.vertices)));
        ++built;
    }
}

TEST_CASE("invalid angle vectors are rejected") {
    SpiralParams bad = classical_spiral(1);  // 90 + 90 degrees
    bad.k = 5;
    CHECK_THROWS_AS(build_k_spiral(bad), InvalidParameter);
    bad.k = 2;
    CHECK_THROWS_AS(build_double_spiral(bad), InvalidParameter);

    SpiralParams open_sum;
    open_sum.n = 2;
    open_sum.k = 4;
    open_sum.alphas = {0.5, 0.5, 0.5};
    CHECK_THROWS_AS(build_k_spiral(open_sum), InvalidParameter);
}
