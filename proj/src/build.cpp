#include "monostatic/build.hpp"

#include <cmath>

namespace monostatic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

KSpiralBuild build_k_spiral(const SpiralParams& params) {
    params.require_valid();
    if (params.k < 3)
        throw InvalidParameter("build_k_spiral: k must be at least 3 (k = 2 is the planar case)");

    const int n = params.n;
    const int k = params.k;
    const SpiralProfile prof = profile(params);
    const double h = apex_lift(params.alphas[0], k);
    const double chord_scale = 1.0 / std::cos(kPi / k);

    KSpiralBuild out;
    out.apex_height = 1.0 + h;
    Polyhedron& poly = out.poly;
    poly.vertices.reserve(1 + static_cast<std::size_t>(k) * n);
    poly.vertices.emplace_back(0.0, 0.0, 1.0 + h);
    for (int j = 0; j < k; ++j) {
        const double az = 2.0 * kPi * j / k;
        const double ca = std::cos(az), sa = std::sin(az);
        for (int i = 0; i < n; ++i) {
            const double rho = prof.x[i] * chord_scale;
            poly.vertices.emplace_back(rho * ca, rho * sa, prof.z[i]);
        }
    }

    auto q = [&](int level, int chain) { return 1 + (chain % k) * n + (level - 1); };

    for (int j = 0; j < k; ++j)
        poly.faces.push_back({0, q(1, j), q(1, j + 1)});
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < k; ++j)
            poly.faces.push_back({q(i, j), q(i + 1, j), q(i + 1, j + 1), q(i, j + 1)});
    Face base;
    for (int j = k - 1; j >= 0; --j) base.push_back(q(n, j));
    poly.faces.push_back(std::move(base));

    for (int i = 1; i < n; ++i)
        if (!outwardness(params, i))
            out.warnings.push_back("level " + std::to_string(i) +
                                   " is not outwards; the apex-lift derivation assumes it");

    poly.require_valid();
    return out;
}

Polygon2D build_double_spiral(const SpiralParams& params) {
    params.require_valid();
    if (params.k != 2)
        throw InvalidParameter("build_double_spiral: k must be 2");

    const SpiralProfile prof = profile(params);
    Polygon2D poly;
    poly.vertices.reserve(2 * static_cast<std::size_t>(params.n) + 1);
    poly.vertices.emplace_back(0.0, 1.0);
    for (int i = 0; i < params.n; ++i)
        poly.vertices.emplace_back(-prof.x[i], prof.z[i]);
    for (int i = params.n - 1; i >= 0; --i)
        poly.vertices.emplace_back(prof.x[i], prof.z[i]);

    poly.require_valid();
    return poly;
}

}  // namespace monostatic
