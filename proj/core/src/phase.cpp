#include "kgc/phase.hpp"

#include <cmath>

namespace kgc {
namespace {

// sq(x) = sqrt(1+x) - 1 without cancellation, valid for x > -1.
double sq(double x) { return x / (1.0 + std::sqrt(1.0 + x)); }

// rs(x) = 1/sqrt(1+x) - 1 without cancellation.
double rs(double x) {
    const double r = std::sqrt(1.0 + x);
    return -x / (r * (1.0 + r));
}

struct Coeffs {
    double es, em, en;     // sign factors
    double Bs, Bm, Bn;     // |b|
    double Ks, Km, Kn;     // signed c^2 / |b| with the phase's signs folded in
    double M;              // constant term eps_s|b_s| - eps_m|b_m| - eps_n|b_n|
};

Coeffs coeffs(const InteractionTriple& t) {
    Coeffs c;
    c.es = t.sigma.sign_factor();
    c.em = t.mu.sign_factor();
    c.en = t.nu.sign_factor();
    c.Bs = std::abs(t.sigma.b);
    c.Bm = std::abs(t.mu.b);
    c.Bn = std::abs(t.nu.b);
    c.Ks = c.es * t.sigma.c2 / c.Bs;
    c.Km = c.em * t.mu.c2 / c.Bm;
    c.Kn = -c.en * t.nu.c2 / c.Bn;
    c.M = c.es * c.Bs - c.em * c.Bm - c.en * c.Bn;
    return c;
}

double xarg(const DispersionParams& p, Vec2 v) {
    return p.c2 * norm2(v) / (p.b * p.b);
}

}  // namespace

double lambda_of(const DispersionParams& p, Vec2 xi) {
    return std::sqrt(p.c2 * norm2(xi) + p.b * p.b);
}

InteractionTriple f4_triple() {
    return {{1.0, 1.0}, {std::sqrt(2.0), 2.0, 2.0}, {1.0, -1.0}};
}

InteractionTriple f5_triple() {
    return {{std::sqrt(2.0), 2.0, 2.0}, {2.0, 4.0}, {std::sqrt(2.0), -2.0, 2.0}};
}

double phi(const InteractionTriple& t, Vec2 xi, Vec2 eta) {
    const Coeffs c = coeffs(t);
    const Vec2 d = xi - eta;
    const double xs = xarg(t.sigma, xi);
    const double xm = xarg(t.mu, d);
    const double xn = xarg(t.nu, eta);
    if (xs > 0.25 || xm > 0.25 || xn > 0.25) {
        return c.es * lambda_of(t.sigma, xi) - c.em * lambda_of(t.mu, d) -
               c.en * lambda_of(t.nu, eta);
    }
    // eps|b| sqrt(1+x) = eps|b| (1 + x/2 - sq(x)^2/2); the linear-in-x parts
    // recombine into a quadratic form in (xi, eta) with no cancellation.
    const double quad = 0.5 * ((c.Ks - c.Km) * norm2(xi) + (c.Kn - c.Km) * norm2(eta)) +
                        c.Km * dot(xi, eta);
    const double ss = sq(xs), sm = sq(xm), sn = sq(xn);
    const double rem =
        -0.5 * (c.es * c.Bs * ss * ss - c.em * c.Bm * sm * sm - c.en * c.Bn * sn * sn);
    return c.M + quad + rem;
}

Vec2 grad_eta_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta) {
    const Coeffs c = coeffs(t);
    const Vec2 d = xi - eta;
    const double xm = xarg(t.mu, d);
    const double xn = xarg(t.nu, eta);
    // d/deta: +eps_mu c_mu^2 (xi-eta)/Lambda_mu - eps_nu c_nu^2 eta/Lambda_nu
    //       = Km (xi-eta)/sqrt(1+xm) + Kn eta/sqrt(1+xn), grouped so that the
    // leading linear parts combine exactly.
    const double xi_coef = c.Km / std::sqrt(1.0 + xm);
    const double eta_coef = (c.Kn - c.Km) + c.Kn * rs(xn) - c.Km * rs(xm);
    return xi_coef * xi + eta_coef * eta;
}

Vec2 grad_xi_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta) {
    const Coeffs c = coeffs(t);
    const Vec2 d = xi - eta;
    const double xs = xarg(t.sigma, xi);
    const double xm = xarg(t.mu, d);
    const double xi_coef = (c.Ks - c.Km) + c.Ks * rs(xs) - c.Km * rs(xm);
    const double eta_coef = c.Km / std::sqrt(1.0 + xm);
    return xi_coef * xi + eta_coef * eta;
}

Mat2 hess_eta_phi(const InteractionTriple& t, Vec2 xi, Vec2 eta) {
    const Coeffs c = coeffs(t);
    const Vec2 d = xi - eta;
    const double xm = xarg(t.mu, d);
    const double xn = xarg(t.nu, eta);
    const double rm = std::sqrt(1.0 + xm);
    const double rn = std::sqrt(1.0 + xn);
    // Isotropic part, compensated: Kn/rn - Km/rm = (Kn - Km) + Kn rs(xn) - Km rs(xm).
    const double iso = (c.Kn - c.Km) + c.Kn * rs(xn) - c.Km * rs(xm);
    const double am = c.Km * (t.mu.c2 / (t.mu.b * t.mu.b)) / (rm * rm * rm);
    const double an = -c.Kn * (t.nu.c2 / (t.nu.b * t.nu.b)) / (rn * rn * rn);
    return Mat2{iso, 0.0, iso} + outer(am, d) + outer(an, eta);
}

void RescaleParams::validate() const {
    if (l < 1) throw std::invalid_argument("rescale depth must be >= 1");
    if (!(lambda >= 0.0 && lambda <= 3.0))
        throw std::invalid_argument("rescale lambda must lie in [0, 3]");
    if (xi_exponent != 3 && xi_exponent != 9)
        throw std::invalid_argument("xi exponent must be 3 or 9");
    if (l * (xi_exponent > 3 ? 12.0 : 4.0) > 900.0)
        throw std::invalid_argument("rescale depth overflows the exponent budget");
}

double rescaled_phi(const RescaleParams& rsp, const InteractionTriple& t, Vec2 xi_prime,
                    Vec2 eta_prime) {
    rsp.validate();
    const double sx = std::exp2(-double(rsp.xi_exponent) * rsp.l);
    const double se = std::exp2(-rsp.lambda * rsp.l);
    const double amp = std::exp2(4.0 * rsp.lambda * rsp.l);
    return amp * phi(t, sx * xi_prime, se * eta_prime);
}

DegeneracyReport degeneracy_report(const InteractionTriple& t) {
    DegeneracyReport r;
    const Vec2 o{0.0, 0.0};
    r.phi_at_origin = phi(t, o, o);
    r.grad_eta_at_origin = grad_eta_phi(t, o, o);
    r.hess_det_at_origin = hess_eta_phi(t, o, o).det();
    r.condition1_holds = (t.sigma.b - t.mu.b - t.nu.b) != 0.0;
    const double cm = t.mu.c, cn = t.nu.c;
    r.condition2_holds = (cm - cn) * (t.mu.c2 * t.nu.b - t.nu.c2 * t.mu.b) >= 0.0;
    return r;
}

TaylorProbe taylor_probe(const InteractionTriple& t) {
    if (!degeneracy_report(t).degenerate())
        throw std::invalid_argument("taylor probe requires a degenerate triple");
    const Vec2 xi0{0.6, 0.8};
    const Vec2 eta0{0.6, 0.8};  // parallel pair, <xi0,eta0> = 1
    // kappa(s) = phi(s xi0, s eta0)/s^2 -> kappa + O(s^2); Richardson with
    // ratio 2 removes the s^2 term.
    auto k_of = [&](double s) { return phi(t, s * xi0, s * eta0) / (s * s); };
    const double s = 1e-3;
    const double k1 = k_of(s), k2 = k_of(0.5 * s);
    TaylorProbe p;
    p.kappa = (4.0 * k2 - k1) / 3.0;
    // Remainder order of phi - kappa s^2 from one dyadic shrink.
    const double r1 = std::abs(k_of(s) - p.kappa) * s * s;
    const double r2 = std::abs(k_of(0.5 * s) - p.kappa) * 0.25 * s * s;
    p.residual_order = std::log2(r1 / r2);
    return p;
}

}  // namespace kgc
