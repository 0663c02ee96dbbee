#pragma once

// Radial critical-point analysis for the degenerate phase family: the scalar
// obstruction function h, its derivatives, the annulus gradient floor of the
// rescaled phase, and the solver for the radial stationary equation.

#include "kgc/phase.hpp"

namespace kgc {

/// h(b) = -2b / sqrt(2 b^2 + 4) + b / sqrt(b^2 + 1), the eta-gradient of the
/// phase along a radial ray with xi = 0, in units of the first triple.
/// order selects the derivative: 0, 1, 3 or 4.  All orders are evaluated
/// with cancellation-free difference formulas; h(b) ~ -b^3/4 near 0.
double h_eval(double b, int order);

struct AnnulusScanResult {
    double min_grad = 0.0;   // certified lower bound for |grad_eta Phi~| on the annulus
    Vec2 argmin;             // eta' realizing the smallest sampled value
    double sampled_min = 0.0;
};

/// Minimum of |grad_eta| of the rescaled phase over the annulus
/// 0.5 <= |eta'| <= 2, |xi'| <= 1 (worst xi' included in the scan).
/// lambda must lie in [0, 0.99]; values outside are a domain error.
AnnulusScanResult min_grad_on_annulus(const InteractionTriple& t, int l, double lambda);

struct CriticalPoint {
    double a = 0.0;        // |xi|
    double b = 0.0;        // |eta| at the radial critical point
    double residual = 0.0; // |F(b)| of the stationary equation
    double phi_value = 0.0;
};

/// Solves 2(a-b)/sqrt(2(a-b)^2+4) + b/sqrt(b^2+1) = 0 for b given a > 0.
/// Bracketed bisection seeded by the small-a law b ~ (4a)^{1/3}, polished
/// with Newton steps.
CriticalPoint solve_critical_point(const InteractionTriple& t, double a);

}  // namespace kgc
