#include "monostatic/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monostatic {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSumTol = 1e-9;
}  // namespace

double SpiralParams::angle_sum() const {
    return std::accumulate(alphas.begin(), alphas.end(), 0.0);
}

std::string SpiralParams::invalid_reason() const {
    if (n < 1) return "n must be at least 1";
    if (k < 2) return "k must be at least 2";
    if (static_cast<int>(alphas.size()) != n + 1)
        return "expected " + std::to_string(n + 1) + " angles, got " +
               std::to_string(alphas.size());
    for (int i = 0; i <= n; ++i) {
        if (!(alphas[i] > 0.0 && alphas[i] < kPi / 2.0))
            return "alpha_" + std::to_string(i + 1) + " = " + std::to_string(alphas[i]) +
                   " outside (0, pi/2)";
    }
    if (std::abs(angle_sum() - kPi) > kSumTol)
        return "angle sum " + std::to_string(angle_sum()) + " does not close to pi";
    return {};
}

void SpiralParams::require_valid() const {
    std::string reason = invalid_reason();
    if (!reason.empty()) throw InvalidParameter(reason);
}

SpiralParams classical_spiral(int n) {
    if (n < 1) throw InvalidParameter("classical_spiral: n must be at least 1");
    SpiralParams p;
    p.n = n;
    p.k = 2;
    p.alphas.assign(static_cast<std::size_t>(n) + 1, kPi / (n + 1));
    return p;
}

ModifiedSpiralResult modified_spiral(int n, double c, double alpha1) {
    if (n < 1) throw InvalidParameter("modified_spiral: n must be at least 1");
    if (!(c > 0.0)) throw InvalidParameter("modified_spiral: c must be positive");
    if (!(alpha1 > 0.0)) throw InvalidParameter("modified_spiral: alpha1 must be positive");

    auto angles_for = [&](double a1) {
        std::vector<double> a(static_cast<std::size_t>(n) + 1);
        double cur = a1;
        for (int i = 0; i < n; ++i) {
            a[i] = cur;
            cur *= c;
        }
        a[n] = a[n - 1];
        return a;
    };
    auto sum_for = [&](double a1) {
        auto a = angles_for(a1);
        return std::accumulate(a.begin(), a.end(), 0.0);
    };

    double solved = alpha1;
    if (std::abs(sum_for(alpha1) - kPi) > kSumTol) {
        // The sum is increasing in alpha1, so bracket [0, pi] always works.
        double lo = 0.0, hi = kPi;
        for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            if (sum_for(mid) < kPi)
                lo = mid;
            else
                hi = mid;
        }
        solved = 0.5 * (lo + hi);
    }

    ModifiedSpiralResult out;
    out.rescale_factor = solved / alpha1;
    out.params.n = n;
    out.params.k = 2;
    out.params.alphas = angles_for(solved);
    std::string reason = out.params.invalid_reason();
    if (!reason.empty()) throw InvalidParameter("modified_spiral: " + reason);
    return out;
}

SpiralProfile profile(const SpiralParams& params) {
    params.require_valid();
    SpiralProfile prof;
    prof.phi.reserve(params.n);
    prof.r.reserve(params.n);
    prof.x.reserve(params.n);
    prof.z.reserve(params.n);
    double r = 1.0;  // P0 at unit distance from the center
    double phi = 0.0;
    for (int i = 0; i < params.n; ++i) {
        r *= std::cos(params.alphas[i]);
        phi += params.alphas[i];
        prof.phi.push_back(phi);
        prof.r.push_back(r);
        prof.x.push_back(r * std::sin(phi));
        prof.z.push_back(r * std::cos(phi));
    }
    return prof;
}

double SpiralProfile::sum_z() const {
    return std::accumulate(z.begin(), z.end(), 0.0);
}

double apex_lift(double alpha1, int k) {
    if (k == 2)
        throw InvalidParameter("apex_lift: undefined for k = 2 (planar case)");
    if (k < 2) throw InvalidParameter("apex_lift: k must be at least 3");
    if (!(alpha1 >= 0.0 && alpha1 < kPi / 2.0))
        throw InvalidParameter("apex_lift: alpha1 outside [0, pi/2)");
    double s = std::sin(alpha1);
    double t = std::tan(kPi / k);
    return s * s * t * t;
}

bool outwardness(const SpiralParams& params, int i) {
    if (i < 0 || i > params.n - 1)
        throw InvalidParameter("outwardness: face index out of range");
    double tail = 0.0;
    for (int j = i + 1; j <= params.n; ++j) tail += params.alphas[j];
    return tail <= kPi / 2.0;
}

SpiralParams from_table_order_degrees(const std::vector<double>& degrees, int k) {
    if (degrees.size() < 2)
        throw InvalidParameter("angle list needs at least 2 entries");
    SpiralParams p;
    p.n = static_cast<int>(degrees.size()) - 1;
    p.k = k;
    p.alphas.assign(degrees.rbegin(), degrees.rend());
    double sum_deg = 0.0;
    for (double d : degrees) sum_deg += d;
    if (std::abs(sum_deg - 180.0) > 0.01)
        throw InvalidParameter("angles sum to " + std::to_string(sum_deg) +
                               " degrees; expected 180 within 0.01");
    double scale = kPi / (sum_deg * kPi / 180.0);
    for (double& a : p.alphas) a = a * (kPi / 180.0) * scale;
    return p;
}

std::vector<double> to_table_order_degrees(const SpiralParams& params) {
    std::vector<double> out(params.alphas.rbegin(), params.alphas.rend());
    for (double& a : out) a *= 180.0 / kPi;
    return out;
}

}  // namespace monostatic
