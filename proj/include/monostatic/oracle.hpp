// Independent verification oracle: samples the support height function
// h(u) = max_v (v - C) . u over a deterministic Fibonacci sphere lattice,
// finds strict local extrema over the 6-nearest-neighbor graph, and
// verifies each candidate against the exact supporting feature:
//   minima  -> a supporting plane through >= 3 vertices whose tangential
//              projections strictly surround the origin (a resting face),
//   maxima  -> a vertex that is the unique support maximizer along its own
//              direction from C (a balance vertex).
// Candidates deduplicate by feature, so the counts converge to the true
// (S, U) as the sample count grows and never depend on classify().
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "monostatic/geom.hpp"
#include "monostatic/mass.hpp"
#include "monostatic/parallel.hpp"
#include "monostatic/polyhedron.hpp"

namespace monostatic {

// Deterministic golden-angle lattice of unit directions.
std::vector<Vec3> fibonacci_sphere(int samples);

// 6 nearest neighbors of every lattice point, found through latitude-row
// azimuth bins; deterministic for a given sample count.
std::vector<std::array<int, 6>> fibonacci_neighbors(const std::vector<Vec3>& dirs);

struct OracleResult {
    int S = 0;
    int U = 0;
    std::vector<std::vector<int>> stable_features;  // supporting vertex sets
    std::vector<int> unstable_vertices;
    int min_candidates = 0;  // raw strict lattice minima before verification
    int max_candidates = 0;
};

// samples >= 1000. The parallel path reduces deterministically and returns
// bit-identical results to the serial path.
OracleResult sampling_oracle(const Polyhedron& poly, const Centroid& c, int samples,
                             Execution exec = Execution::Parallel);

}  // namespace monostatic
