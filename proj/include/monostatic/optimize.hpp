// Derivative-free minimization of the closed-form centroid height over
// spiral angles for a given (n, k), with mono-monostability verification of
// each optimum, plus the (n, k) grid scan.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monostatic/equilibrium.hpp"
#include "monostatic/parallel.hpp"
#include "monostatic/spiral.hpp"

namespace monostatic {

// Objective over the free variables alpha_1..alpha_n (alpha_{n+1} is
// eliminated as pi minus their sum). Infeasible points (any of the n+1
// angles outside (0, pi/2)) score 1 plus the squared violation.
double zc_objective(const std::vector<double>& vars, int n, int k);

// Exact partial derivatives of the corrected closed form with respect to
// alpha_1..alpha_n at an interior feasible point.
std::vector<double> objective_gradient(const std::vector<double>& vars, int n, int k);

enum class OptStatus { Converged, Infeasible, NotMonoMonostatic };

std::string to_string(OptStatus s);

struct OptimizationResult {
    int n = 0, k = 0;
    std::vector<double> alphas;          // n+1 radians, alpha_1 first
    double objective = 0.0;              // z_C of the best feasible optimum
    long long evaluations = 0;
    int starts = 0;
    OptStatus status = OptStatus::Infeasible;
    // Verification of the built optimum under the vertex skeleton.
    int S = 0, H = 0, U = 0;
    int v = 0;                           // vertex count of the built object

    std::vector<double> alphas_table_order_deg() const;
};

struct OptimizeOptions {
    int starts = 16;
    unsigned seed = 1;
    double simplex_step = 0.05;          // initial simplex edge, radians
    double perturbation_scale = 0.2;     // multi-start spread, radians
    double spread_tol = 1e-12;
    long long max_evaluations = 100000;  // per start
};

// Multi-start Nelder-Mead from the classical equal-angle start plus
// low-discrepancy perturbations. Deterministic for fixed (n, k, starts,
// seed); the best result wins by strict objective comparison with
// angle-lexicographic tie-break, so the reduction is order-independent.
OptimizationResult optimize(int n, int k, const OptimizeOptions& opts = {});

struct ScanRow {
    int n = 0, k = 0, v = 0;
    double z_c = 0.0;
    std::vector<double> alphas;  // radians, alpha_1 first
    OptStatus status = OptStatus::Infeasible;
    bool planar = false;         // k = 2 double-spiral row
};

struct ScanResult {
    std::vector<ScanRow> found;  // mono-monostatic rows, ordered by (n, k)
    std::vector<ScanRow> tried;  // every grid cell evaluated
};

// For each n <= n_max: the k = 2 planar double spiral (reported when
// mono-monostatic) and the minimal k in [3, k_max] whose optimum verifies
// as mono-monostatic under the vertex skeleton.
ScanResult scan(int n_max, int k_max, const OptimizeOptions& opts = {},
                Execution exec = Execution::Parallel);

}  // namespace monostatic
