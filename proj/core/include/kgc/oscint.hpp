#pragma once

// Oscillatory quadrature over planar annuli: adaptive polar cells with
// Gauss-Legendre panels and an embedded error estimate, stationary-phase
// evaluation, a certified nonstationary tail bound, and time integration of
// oscillatory profile integrands.

#include <functional>

#include "kgc/geometry.hpp"

namespace kgc {

/// Integrand A(p) e^{i s phase(p)}; the gradient feeds the refinement rule
/// and is required.
struct OscIntegrand {
    std::function<complex(Vec2)> amplitude;
    std::function<double(Vec2)> phase;
    std::function<Vec2(Vec2)> phase_grad;
};

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    /// Cells split along a direction while the phase span s * |grad phase|
    /// * extent along that direction exceeds this.  Directional splitting
    /// keeps the cell count near the product of the oscillation counts per
    /// axis instead of its square.
    double osc_threshold = 3.5;
    long cell_budget = 4'000'000;
};

struct QuadratureResult {
    complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long cells = 0;
    bool converged = true;
};

/// Integrates A e^{i s phase} over r_lo <= |p| <= r_hi.  Deterministic
/// depth-first traversal; identical inputs give bit-identical output.
QuadratureResult integrate_annulus(const OscIntegrand& f, double s, double r_lo,
                                   double r_hi, const QuadratureConfig& cfg);

/// Leading stationary-phase term at a nondegenerate critical point:
/// (2 pi / s) |det H|^{-1/2} e^{i pi sig/4} A* e^{i s phi*}.
complex stationary_phase_eval(double s, complex amp_star, double phi_star,
                              const Mat2& hess);

/// Integration-by-parts bound for a region with no stationary points:
///   area * amp_sup * N! * (factor / (s * min_grad))^N,
/// factor = amp_grad_sup / amp_sup + 3 hess_sup / min_grad.
double nonstationary_tail_bound(double area, double amp_sup, double amp_grad_sup,
                                double hess_sup, double min_grad, double s, int n);

/// int_{s_lo}^{s_hi} G(s) ds with the substitution s = u^3, which absorbs an
/// integrable s^{-2/3} singularity at 0.  Adaptive Simpson in u.
complex integrate_time(const std::function<complex(double)>& G, double s_lo,
                       double s_hi, double tol);

/// int_{s_lo}^{s_hi} C e^{i alpha s} s^{p-1} ds for p = 0 (log-type kernel,
/// via Ci/Si differences) or p = 1 (pure exponential).  Requires s_lo > 0.
complex oscillatory_tail(complex C, double alpha, int p, double s_lo, double s_hi);

}  // namespace kgc
