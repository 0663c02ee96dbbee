#pragma once

// Klein-Gordon dispersion branches, the three-wave phase function family,
// its analytic derivatives, dyadic rescaling, and degeneracy classification
// of parameter triples.

#include <stdexcept>

#include "kgc/geometry.hpp"

namespace kgc {

/// One Klein-Gordon branch: speed c > 0 and signed mass b != 0.
/// c2 is the squared speed; when c is irrational but c^2 is a small integer
/// (the cascade triples have c^2 in {1,2,4}), set c2 exactly rather than
/// letting it default to the rounded square.  The degeneracy cancellations
/// are exact in c^2, and a one-ulp error there becomes a spurious linear
/// term that the rescaled-gradient scans amplify by 2^{3*lambda*l}.
struct DispersionParams {
    double c = 1.0;
    double b = 1.0;
    double c2 = c * c;

    /// (-1)^{(sgn b + 3)/2}: +1 for b > 0, -1 for b < 0.
    double sign_factor() const { return b > 0.0 ? 1.0 : -1.0; }
};

/// sqrt(c^2 |xi|^2 + b^2).
double lambda_of(const DispersionParams& p, Vec2 xi);

/// The ordered branches (sigma, mu, nu) of one bilinear interaction;
/// mu rides on xi - eta, nu on eta.
struct InteractionTriple {
    DispersionParams sigma, mu, nu;
};

/// The two degenerate triples driving the cascade.
InteractionTriple f4_triple();  // c^2 = (1,2,1), b = (1,2,-1)
InteractionTriple f5_triple();  // c^2 = (2,4,2), b = (2,4,-2)

/// Phase Phi(xi,eta) = eps_sigma Lambda_sigma(xi) - eps_mu Lambda_mu(xi-eta)
///                     - eps_nu Lambda_nu(eta).
/// Uses a compensated evaluation path when all square-root arguments are
/// small, so near-origin values keep full relative accuracy despite the
/// three-way cancellation.
double phi(const InteractionTriple& t, Vec2 xi, Vec2 eta);

Vec2 grad_eta_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta);
Vec2 grad_xi_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta);
Mat2 hess_eta_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta);

struct RescaleParams {
    int l = 1;             // dyadic depth, >= 1
    double lambda = 1.0;   // eta-scale exponent in [0, 3]
    int xi_exponent = 3;   // 3 for the first iteration, 9 for the second

    void validate() const;
};

/// Rescaled phase: 2^{4 lambda l} * Phi(2^{-xi_exponent l} xi', 2^{-lambda l} eta').
double rescaled_phi(const RescaleParams& rs, const InteractionTriple& t, Vec2 xi_prime,
                    Vec2 eta_prime);

struct DegeneracyReport {
    double phi_at_origin = 0.0;
    Vec2 grad_eta_at_origin;
    double hess_det_at_origin = 0.0;
    bool condition1_holds = false;  // b_sigma - b_mu - b_nu != 0
    bool condition2_holds = false;  // (c_mu - c_nu)(c_mu^2 b_nu - c_nu^2 b_mu) >= 0

    bool degenerate(double tol = 1e-12) const {
        return std::abs(phi_at_origin) <= tol && norm(grad_eta_at_origin) <= tol &&
               std::abs(hess_det_at_origin) <= tol;
    }
};

DegeneracyReport degeneracy_report(const InteractionTriple& t);

struct TaylorProbe {
    double kappa = 0.0;            // bilinear coefficient in Phi ~ kappa <xi,eta>
    double residual_order = 0.0;   // measured order of the non-bilinear remainder
};

/// Fits phi(t xi0, t eta0) ~ kappa t^2 <xi0,eta0> along a parallel pair and
/// measures the order of the remainder.  Refuses non-degenerate triples.
TaylorProbe taylor_probe(const InteractionTriple& t);

}  // namespace kgc
