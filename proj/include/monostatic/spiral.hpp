// Conway spiral parametrizations: the classical equal-angle spiral, the
// geometric-progression (modified) spiral, and arbitrary-angle generalized
// spirals, together with the planar profile they generate.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace monostatic {

class InvalidParameter : public std::runtime_error {
public:
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

// Angle vector of a generalized Conway spiral. alphas holds the n+1 central
// angles in radians ordered from the top point down, so alphas[0] is the
// angle adjacent to the apex. The angles span pole to pole: they sum to pi.
struct SpiralParams {
    int n = 0;                   // number of spiral steps
    int k = 2;                   // multiplicity of spirals around the axis
    std::vector<double> alphas;  // n+1 angles, alpha_1 first

    // Empty string when the invariants hold; otherwise a description of the
    // first violation. Sum closure is checked to 1e-9, bounds are open (0, pi/2).
    std::string invalid_reason() const;
    bool valid() const { return invalid_reason().empty(); }
    void require_valid() const;

    double angle_sum() const;
};

// Per-step quantities of the planar spiral: cumulative angle phi_i, radius
// r_i = prod cos(alpha_j), and coordinates x_i = r_i sin(phi_i),
// z_i = r_i cos(phi_i). Index 0 of each vector is step i=1.
struct SpiralProfile {
    std::vector<double> phi;
    std::vector<double> r;
    std::vector<double> x;
    std::vector<double> z;

    double sum_z() const;  // S_n
};

// Equal central angles pi/(n+1). No validation: n=1 yields the degenerate
// 90-degree pair, which invalid_reason() flags for callers downstream.
SpiralParams classical_spiral(int n);

struct ModifiedSpiralResult {
    SpiralParams params;
    double rescale_factor = 1.0;  // factor applied to alpha1 to close the sum
};

// alpha_i = c^(i-1) * alpha1 for i = 1..n with alpha_{n+1} = alpha_n. When the
// sum misses pi, alpha1 is rescaled (bisection, c fixed) until it closes.
ModifiedSpiralResult modified_spiral(int n, double c, double alpha1);

SpiralProfile profile(const SpiralParams& params);

// Upward displacement of the top vertex: h = sin^2(alpha1) tan^2(pi/k).
// Defined for k >= 3 only; the planar k=2 case has no lift.
double apex_lift(double alpha1, int k);

// Face f_i (edge e_i) is outwards iff the tail sum over alpha_{i+2..n+1} is
// at most pi/2. i = 0 is never outwards.
bool outwardness(const SpiralParams& params, int i);

// Conversion helpers for the published table ordering (alpha_{n+1} first, in
// degrees). from_table_order_degrees rescales the sum to pi when the input
// closes to within 0.01 degree, and rejects it otherwise.
SpiralParams from_table_order_degrees(const std::vector<double>& degrees, int k);
std::vector<double> to_table_order_degrees(const SpiralParams& params);

}  // namespace monostatic
