#include "kgc/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace kgc {

double h_eval(double b, int order) {
    const double b2 = b * b;
    const double X = 1.0 + b2;        // from the unit-mass branch
    const double Y = 1.0 + 0.5 * b2;  // from the mass-2 branch after normalizing
    const double sX = std::sqrt(X), sY = std::sqrt(Y);
    switch (order) {
        case 0:
            // b [X^{-1/2} - Y^{-1/2}] = -b^3 / (2 sX sY (sX + sY)), ~ -b^3/4.
            return -0.5 * b * b2 / (sX * sY * (sX + sY));
        case 1: {
            // X^{-3/2} - Y^{-3/2} = (Y^3 - X^3) / ((XY)^{3/2} (X^{3/2} + Y^{3/2})).
            const double num = (Y - X) * (X * X + X * Y + Y * Y);
            const double den = sX * sY * X * Y * (X * sX + Y * sY);
            return num / den;
        }
        case 3: {
            const double t1 = 3.0 * (4.0 * b2 - 1.0) / (X * X * X * sX);
            const double t2 = 6.0 * std::sqrt(2.0) * (4.0 * b2 - 2.0) /
                              std::pow(b2 + 2.0, 3.5);
            return t1 - t2;
        }
        case 4: {
            const double t1 = 15.0 * b * (3.0 - 4.0 * b2) / std::pow(X, 4.5);
            const double t2 = 60.0 * std::sqrt(2.0) * b * (2.0 * b2 - 3.0) /
                              std::pow(b2 + 2.0, 4.5);
            return t1 + t2;
        }
        default:
            throw std::invalid_argument("h_eval: order must be 0, 1, 3 or 4");
    }
}

namespace {

struct GradScan {
    const InteractionTriple* t;
    double xi_scale, eta_scale, amp;

    double operator()(double a, double r, double th) const {
        const Vec2 xi{xi_scale * a, 0.0};
        const Vec2 eta{eta_scale * r * std::cos(th), eta_scale * r * std::sin(th)};
        return amp * norm(grad_eta_phi(*t, xi, eta));
    }
};

}  // namespace

AnnulusScanResult min_grad_on_annulus(const InteractionTriple& t, int l, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 0.99))
        throw std::domain_error("min_grad_on_annulus: lambda must lie in [0, 0.99]");
    if (l < 1) throw std::invalid_argument("min_grad_on_annulus: l must be >= 1");
    // |grad_{eta'} Phi~| = 2^{3 lambda l} |grad_eta Phi| at the scaled arguments.
    GradScan g{&t, std::exp2(-3.0 * l), std::exp2(-lambda * l), std::exp2(3.0 * lambda * l)};

    // Scan |xi'| in [0.55, 1.2] (rotations reduce xi to the positive axis) and
    // eta' over the half annulus 0.55 <= |eta'| <= 1.2, 0 <= theta <= pi.
    constexpr double kLo = 0.55, kHi = 1.2;
    const int na = 33, nr = 96, nt = 192;
    double best = std::numeric_limits<double>::infinity();
    double ba = 0.0, br = 0.0, bt = 0.0;
    double lip = 0.0;  // largest observed |dg/dr|, |dg/(r dth)| over the coarse grid
    std::vector<double> row(nt + 1);
    const double dr = (kHi - kLo) / nr, dth = M_PI / nt;
    for (int ia = 0; ia <= na; ++ia) {
        const double a = kLo + (kHi - kLo) * ia / na;
        for (int ir = 0; ir <= nr; ++ir) {
            const double r = kLo + dr * ir;
            double prev = 0.0;
            for (int it = 0; it <= nt; ++it) {
                const double th = dth * it;
                const double v = g(a, r, th);
                if (v < best) { best = v; ba = a; br = r; bt = th; }
                if (it > 0) lip = std::max(lip, std::abs(v - prev) / (r * dth));
                if (ir > 0) lip = std::max(lip, std::abs(v - row[it]) / dr);
                row[it] = v;
                prev = v;
            }
        }
    }
    // Local refinement around the coarse minimizer, shrinking the cell twice.
    double hr = dr, hth = dth, ha = (kHi - kLo) / na;
    for (int round = 0; round < 3; ++round) {
        const double a0 = ba, r0 = br, t0 = bt;
        for (int ia = -4; ia <= 4; ++ia)
            for (int ir = -8; ir <= 8; ++ir)
                for (int it = -8; it <= 8; ++it) {
                    const double a = std::clamp(a0 + ha * ia / 4.0, kLo, kHi);
                    const double r = std::clamp(r0 + hr * ir / 8.0, kLo, kHi);
                    const double th = std::clamp(t0 + hth * it / 8.0, 0.0, M_PI);
                    const double v = g(a, r, th);
                    if (v < best) { best = v; ba = a; br = r; bt = th; }
                }
        ha /= 4.0; hr /= 8.0; hth /= 8.0;
    }
    AnnulusScanResult res;
    res.sampled_min = best;
    res.argmin = Vec2{br * std::cos(bt), br * std::sin(bt)};
    res.min_grad = best - lip * (hr + 2.0 * hth);
    return res;
}

CriticalPoint solve_critical_point(const InteractionTriple& t, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("solve_critical_point: need a > 0");
    auto F = [&](double b) {
        return grad_eta_phi(t, Vec2{a, 0.0}, Vec2{b, 0.0}).x;
    };
    auto dF = [&](double b) {
        return hess_eta_phi(t, Vec2{a, 0.0}, Vec2{b, 0.0}).xx;
    };
    const double seed = std::cbrt(4.0 * a);
    double lo = 0.5 * seed, hi = 2.0 * seed;
    double flo = F(lo), fhi = F(hi);
    for (int i = 0; i < 200 && flo * fhi > 0.0; ++i) {
        lo *= 0.5; hi *= 2.0;
        flo = F(lo); fhi = F(hi);
    }
    if (flo * fhi > 0.0)
        throw std::runtime_error("solve_critical_point: failed to bracket a root");
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (flo * fm <= 0.0) { hi = mid; fhi = fm; } else { lo = mid; flo = fm; }
    }
    double b = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        const double d = dF(b);
        if (d != 0.0) {
            const double step = F(b) / d;
            const double bn = b - step;
            if (bn > 0.0 && std::abs(F(bn)) <= std::abs(F(b))) b = bn;
        }
    }
    CriticalPoint cp;
    cp.a = a;
    cp.b = b;
    cp.residual = std::abs(F(b));
    cp.phi_value = phi(t, Vec2{a, 0.0}, Vec2{b, 0.0});
    return cp;
}

}  // namespace kgc
