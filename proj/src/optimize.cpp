#include "monostatic/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monostatic/build.hpp"

namespace monostatic {

namespace {

constexpr double kPi = 3.14159265358979323846;

double bound_violation(const std::vector<double>& full) {
    double viol = 0.0;
    for (double a : full) {
        if (a <= 0.0) viol += (0.0 - a) * (0.0 - a) + 1e-12;
        if (a >= kPi / 2.0) viol += (a - kPi / 2.0) * (a - kPi / 2.0) + 1e-12;
    }
    return viol;
}

// Generalized golden-ratio low-discrepancy sequence in [0,1)^dim.
std::vector<double> rd_point(int dim, unsigned long long index) {
    double g = 2.0;
    for (int it = 0; it < 64; ++it) g = std::pow(1.0 + g, 1.0 / (dim + 1));
    std::vector<double> out(dim);
    double inv = 1.0 / g;
    double a = inv;
    for (int j = 0; j < dim; ++j) {
        out[j] = std::fmod(0.5 + a * static_cast<double>(index + 1), 1.0);
        a *= inv;
    }
    return out;
}

struct NelderMeadOutcome {
    std::vector<double> x;
    double value = 0.0;
    long long evaluations = 0;
};

NelderMeadOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                              const std::vector<double>& x0, double step, double spread_tol,
                              long long max_evals) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    long long evals = 0;
    for (int i = 0; i <= n; ++i) { vals[i] = f(simplex[i]); ++evals; }

    std::vector<int> order(n + 1);
    while (evals < max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (vals[a] != vals[b]) return vals[a] < vals[b];
            return simplex[a] < simplex[b];
        });
        {
            std::vector<std::vector<double>> s2(n + 1);
            std::vector<double> v2(n + 1);
            for (int i = 0; i <= n; ++i) { s2[i] = simplex[order[i]]; v2[i] = vals[order[i]]; }
            simplex.swap(s2);
            vals.swap(v2);
        }
        if (vals[n] - vals[0] < spread_tol) break;

        std::vector<double> cen(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cen[j] += simplex[i][j] / n;

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = cen[j] + t * (cen[j] - simplex[n][j]);
            return p;
        };

        std::vector<double> xr = blend(1.0);
        double fr = f(xr); ++evals;
        if (fr < vals[0]) {
            std::vector<double> xe = blend(2.0);
            double fe = f(xe); ++evals;
            if (fe < fr) { simplex[n] = xe; vals[n] = fe; }
            else { simplex[n] = xr; vals[n] = fr; }
        } else if (fr < vals[n - 1]) {
            simplex[n] = xr; vals[n] = fr;
        } else {
            std::vector<double> xc = blend(-0.5);
            double fc = f(xc); ++evals;
            if (fc < vals[n]) { simplex[n] = xc; vals[n] = fc; }
            else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    vals[i] = f(simplex[i]); ++evals;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (vals[i] < vals[best] || (vals[i] == vals[best] && simplex[i] < simplex[best])) best = i;
    return {simplex[best], vals[best], evals};
}

}  // namespace

double zc_objective(const std::vector<double>& vars, int n, int k) {
    std::vector<double> full(vars);
    full.push_back(kPi - std::accumulate(vars.begin(), vars.end(), 0.0));
    double viol = bound_violation(full);
    if (viol > 0.0) return 1.0 + viol;

    double r = 1.0, phi = 0.0, sn = 0.0;
    for (int i = 0; i < n; ++i) {
        r *= std::cos(vars[i]);
        phi += vars[i];
        sn += r * std::cos(phi);
    }
    if (k >= 3) {
        double s = std::sin(vars[0]);
        double t = std::tan(kPi / k);
        sn += s * s * t * t / k;
    }
    return (1.0 + k * sn) / (1.0 + static_cast<double>(k) * n);
}

std::vector<double> objective_gradient(const std::vector<double>& vars, int n, int k) {
    // Only the free variables are bound-checked: the closed form does not
    // depend on the eliminated angle (n = 1 has no interior eliminated angle
    // at all).
    for (double a : vars)
        if (a <= 1e-12 || a >= kPi / 2.0 - 1e-12)
            throw InvalidParameter("objective_gradient: boundary point");

    std::vector<double> x(n), z(n);
    double r = 1.0, phi = 0.0;
    for (int i = 0; i < n; ++i) {
        r *= std::cos(vars[i]);
        phi += vars[i];
        x[i] = r * std::sin(phi);
        z[i] = r * std::cos(phi);
    }
    const double scale = k / (1.0 + static_cast<double>(k) * n);
    std::vector<double> grad(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double tan_m = std::tan(vars[m]);
        double acc = 0.0;
        for (int i = m; i < n; ++i) acc -= z[i] * tan_m + x[i];
        if (m == 0 && k >= 3) {
            double t = std::tan(kPi / k);
            acc += 2.0 * std::sin(vars[0]) * std::cos(vars[0]) * t * t / k;
        }
        grad[m] = scale * acc;
    }
    return grad;
}

std::string to_string(OptStatus s) {
    switch (s) {
        case OptStatus::Converged: return "converged";
        case OptStatus::Infeasible: return "infeasible";
        case OptStatus::NotMonoMonostatic: return "not-mono-monostatic";
    }
    return "?";
}

std::vector<double> OptimizationResult::alphas_table_order_deg() const {
    std::vector<double> out(alphas.rbegin(), alphas.rend());
    for (double& a : out) a *= 180.0 / kPi;
    return out;
}

OptimizationResult optimize(int n, int k, const OptimizeOptions& opts) {
    if (n < 1) throw InvalidParameter("optimize: n must be at least 1");
    if (k < 2) throw InvalidParameter("optimize: k must be at least 2");
    if (opts.starts < 1) throw InvalidParameter("optimize: starts must be at least 1");

    auto f = [&](const std::vector<double>& v) { return zc_objective(v, n, k); };

    const std::vector<double> classical(static_cast<std::size_t>(n), kPi / (n + 1));
    std::vector<double> best_x;
    double best_val = 0.0;
    long long total_evals = 0;
    bool any_feasible = false;

    std::vector<NelderMeadOutcome> outcomes(opts.starts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s < opts.starts; ++s) {
        std::vector<double> x0 = classical;
        if (s > 0) {
            auto u = rd_point(n, static_cast<unsigned long long>(opts.seed) * 1000003ULL + s - 1);
            for (int j = 0; j < n; ++j)
                x0[j] += (u[j] - 0.5) * 2.0 * opts.perturbation_scale;
        }
        outcomes[s] =
            nelder_mead(f, x0, opts.simplex_step, opts.spread_tol, opts.max_evaluations);
    }

    for (const NelderMeadOutcome& o : outcomes) {
        total_evals += o.evaluations;
        if (o.value >= 1.0) continue;  // penalized, infeasible start
        if (!any_feasible || o.value < best_val ||
            (o.value == best_val && o.x < best_x)) {
            any_feasible = true;
            best_val = o.value;
            best_x = o.x;
        }
    }

    if (any_feasible) {
        // Polish with a tight restarted simplex so the optimum is stationary
        // well past print precision.
        NelderMeadOutcome polished = nelder_mead(f, best_x, 1e-5, 1e-16, 20000);
        total_evals += polished.evaluations;
        if (polished.value <= best_val) {
            best_val = polished.value;
            best_x = polished.x;
        }
    }

    OptimizationResult res;
    res.n = n;
    res.k = k;
    res.starts = opts.starts;
    res.evaluations = total_evals;
    if (!any_feasible) {
        res.status = OptStatus::Infeasible;
        return res;
    }

    res.alphas = best_x;
    res.alphas.push_back(kPi - std::accumulate(best_x.begin(), best_x.end(), 0.0));
    res.objective = best_val;

    SpiralParams params;
    params.n = n;
    params.k = k;
    params.alphas = res.alphas;
    try {
        if (k >= 3) {
            KSpiralBuild built = build_k_spiral(params);
            Centroid c = centroid(built.poly, MassModel::Vertex);
            EquilibriumReport rep = classify(built.poly, c);
            res.S = rep.S; res.H = rep.H; res.U = rep.U;
            res.v = built.poly.vertex_count();
            res.status = rep.mono_monostatic() ? OptStatus::Converged
                                               : OptStatus::NotMonoMonostatic;
        } else {
            Polygon2D built = build_double_spiral(params);
            Centroid2D c = centroid(built, MassModel::Vertex);
            EquilibriumReport2D rep = classify_2d(built, c);
            res.S = rep.S; res.H = 0; res.U = rep.U;
            res.v = built.vertex_count();
            res.status = rep.mono_monostatic() ? OptStatus::Converged
                                               : OptStatus::NotMonoMonostatic;
        }
    } catch (const std::exception&) {
        res.status = OptStatus::Infeasible;
    }
    return res;
}

ScanResult scan(int n_max, int k_max, const OptimizeOptions& opts, Execution exec) {
    if (n_max < 2 || k_max < 2) throw InvalidParameter("scan: bounds must be at least 2");

    struct Cell { int n, k; };
    std::vector<Cell> cells;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 2; k <= k_max; ++k) cells.push_back({n, k});

    std::vector<OptimizationResult> results(cells.size());
    const bool parallel = (exec == Execution::Parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::size_t i = 0; i < cells.size(); ++i) {
        OptimizeOptions cell_opts = opts;
        results[i] = optimize(cells[i].n, cells[i].k, cell_opts);
    }
    (void)parallel;

    ScanResult out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        ScanRow row;
        row.n = cells[i].n;
        row.k = cells[i].k;
        row.v = cells[i].k * cells[i].n + 1;
        row.z_c = results[i].objective;
        row.alphas = results[i].alphas;
        row.status = results[i].status;
        row.planar = (cells[i].k == 2);
        out.tried.push_back(row);
    }

    for (int n = 1; n <= n_max; ++n) {
        // Planar k = 2 row.
        for (const ScanRow& row : out.tried)
            if (row.n == n && row.k == 2 && row.status == OptStatus::Converged)
                out.found.push_back(row);
        // Minimal verifying 3D k.
        for (int k = 3; k <= k_max; ++k) {
            const ScanRow* row = nullptr;
            for (const ScanRow& r : out.tried)
                if (r.n == n && r.k == k) { row = &r; break; }
            if (row && row->status == OptStatus::Converged) {
                out.found.push_back(*row);
                break;
            }
        }
    }
    std::sort(out.found.begin(), out.found.end(), [](const ScanRow& a, const ScanRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.k < b.k;
    });
    return out;
}

}  // namespace monostatic
