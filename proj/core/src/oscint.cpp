#include "kgc/oscint.hpp"

#include "kgc/cisi.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kgc {
namespace {

constexpr double kNodes7[7] = {-0.9491079123427585245261897, -0.7415311855993944398638648,
                               -0.4058451513773971669066064, 0.0,
                               0.4058451513773971669066064,  0.7415311855993944398638648,
                               0.9491079123427585245261897};
constexpr double kWeights7[7] = {0.1294849661688696932706114, 0.2797053914892766679014678,
                                 0.3818300505051189449503698, 0.4179591836734693877551020,
                                 0.3818300505051189449503698, 0.2797053914892766679014678,
                                 0.1294849661688696932706114};
constexpr double kNodes5[5] = {-0.9061798459386639927976269, -0.5384693101056830910363144,
                               0.0, 0.5384693101056830910363144,
                               0.9061798459386639927976269};
constexpr double kWeights5[5] = {0.2369268850561890875142640, 0.4786286704993664680412915,
                                 0.5688888888888888888888889, 0.4786286704993664680412915,
                                 0.2369268850561890875142640};

struct Cell {
    double ra, rb, ta, tb;
};

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

template <int N>
complex panel(const OscIntegrand& f, double s, const Cell& cell, const double* nodes,
              const double* weights) {
    const double rm = 0.5 * (cell.ra + cell.rb), rh = 0.5 * (cell.rb - cell.ra);
    const double tm = 0.5 * (cell.ta + cell.tb), th = 0.5 * (cell.tb - cell.ta);
    complex acc{0.0, 0.0};
    for (int i = 0; i < N; ++i) {
        const double r = rm + rh * nodes[i];
        complex row{0.0, 0.0};
        for (int j = 0; j < N; ++j) {
            const double t = tm + th * nodes[j];
            const Vec2 p{r * std::cos(t), r * std::sin(t)};
            const complex a = f.amplitude(p);
            const double ph = s * f.phase(p);
            row += weights[j] * a * complex{std::cos(ph), std::sin(ph)};
        }
        acc += weights[i] * r * row;
    }
    return acc * (rh * th);
}

}  // namespace

QuadratureResult integrate_annulus(const OscIntegrand& f, double s, double r_lo,
                                   double r_hi, const QuadratureConfig& cfg) {
    if (!(r_hi > r_lo) || r_lo < 0.0)
        throw std::invalid_argument("integrate_annulus: bad radial bounds");
    const double total_area = M_PI * (r_hi * r_hi - r_lo * r_lo);
    std::vector<Cell> stack;
    // Tolerance scale: the amplitude mass, not the (cancelling) oscillatory
    // sum, so strong cancellation does not drive the tolerance to zero.
    double scale = 0.0;
    for (int it = 7; it >= 0; --it)
        for (int ir = 3; ir >= 0; --ir) {
            Cell c{r_lo + (r_hi - r_lo) * ir / 4.0, r_lo + (r_hi - r_lo) * (ir + 1) / 4.0,
                   2.0 * M_PI * it / 8.0, 2.0 * M_PI * (it + 1) / 8.0};
            const double rm = 0.5 * (c.ra + c.rb), rh = 0.5 * (c.rb - c.ra);
            const double tm = 0.5 * (c.ta + c.tb), th = 0.5 * (c.tb - c.ta);
            double mass = 0.0;
            for (int i = 0; i < 5; ++i) {
                const double r = rm + rh * kNodes5[i];
                double row = 0.0;
                for (int j = 0; j < 5; ++j) {
                    const double t = tm + th * kNodes5[j];
                    row += kWeights5[j] *
                           std::abs(f.amplitude(Vec2{r * std::cos(t), r * std::sin(t)}));
                }
                mass += kWeights5[i] * r * row;
            }
            scale += mass * rh * th;
            stack.push_back(c);
        }
    const double tol = cfg.abs_tol + cfg.rel_tol * scale;

    QuadratureResult res;
    Kahan re, im, err;
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        ++res.cells;
        const double rm = 0.5 * (c.ra + c.rb), tm = 0.5 * (c.ta + c.tb);
        const double arc = c.rb * (c.tb - c.ta), dr = c.rb - c.ra;
        const double area = rm * dr * (c.tb - c.ta);
        const complex i7 = panel<7>(f, s, c, kNodes7, kWeights7);
        const complex i5 = panel<5>(f, s, c, kNodes5, kWeights5);
        const double e = std::abs(i7 - i5);
        // Phase span per axis, maximized over center and corners; amplitude
        // sup over those probes and the interior quadrature nodes.
        double gr = 0.0, gt = 0.0, amax = 0.0;
        const double probes[5][2] = {{rm, tm}, {c.ra, c.ta}, {c.ra, c.tb},
                                     {c.rb, c.ta}, {c.rb, c.tb}};
        for (const auto& pr : probes) {
            const double cs = std::cos(pr[1]), sn = std::sin(pr[1]);
            const Vec2 p{pr[0] * cs, pr[0] * sn};
            const Vec2 g = f.phase_grad(p);
            gr = std::max(gr, std::abs(g.x * cs + g.y * sn));
            gt = std::max(gt, std::abs(-g.x * sn + g.y * cs));
            amax = std::max(amax, std::abs(f.amplitude(p)));
        }
        const double rh = 0.5 * (c.rb - c.ra), th = 0.5 * (c.tb - c.ta);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const double r = rm + rh * kNodes5[i], t = tm + th * kNodes5[j];
                amax = std::max(amax,
                                std::abs(f.amplitude(Vec2{r * std::cos(t), r * std::sin(t)})));
            }
        const double span_r = s * gr * dr, span_t = s * gt * arc;
        const double span_max = std::max(span_r, span_t);
        // Cells whose worst-case contribution (after one integration-by-parts
        // factor from the oscillation) is below their share of the error
        // budget are accepted as-is, with that bound folded into the estimate.
        const double neg_bound = amax * area / (1.0 + span_max);
        const bool negligible = neg_bound * total_area <= 0.25 * tol * area;
        // The embedded difference e tracks the order-5 panel's error.  The
        // kept order-7 panel converges faster, so extrapolate its error as
        // e^{14/10} (in units of the cell's amplitude mass) and accept on
        // whichever estimate meets the cell's share of the budget.
        const double cell_mass = amax * area;
        const double e7 = cell_mass > 0.0
                              ? e * std::min(1.0, std::pow(e / cell_mass, 0.4))
                              : e;
        const double allow = tol * area / total_area;
        const bool small_enough =
            std::min(e, e7) <= allow && (negligible || span_max <= cfg.osc_threshold);
        if (small_enough || res.cells >= cfg.cell_budget) {
            if (!small_enough) res.converged = false;
            re.add(i7.real());
            im.add(i7.imag());
            err.add(std::max(std::min(e, std::max(e7, allow)),
                             negligible ? neg_bound : 0.0));
            continue;
        }
        const bool split_radial = span_r != span_t ? span_r > span_t : dr >= arc;
        if (split_radial) {
            stack.push_back({rm, c.rb, c.ta, c.tb});
            stack.push_back({c.ra, rm, c.ta, c.tb});
        } else {
            stack.push_back({c.ra, c.rb, tm, c.tb});
            stack.push_back({c.ra, c.rb, c.ta, tm});
        }
    }
    res.value = complex{re.sum, im.sum};
    res.error_estimate = err.sum;
    return res;
}

complex stationary_phase_eval(double s, complex amp_star, double phi_star,
                              const Mat2& hess) {
    const double d = hess.det();
    if (d == 0.0) throw std::invalid_argument("stationary_phase_eval: singular Hessian");
    const auto [pos, neg] = hess.signature();
    const double ph = s * phi_star + M_PI * (pos - neg) / 4.0;
    return (2.0 * M_PI / s) / std::sqrt(std::abs(d)) * amp_star *
           complex{std::cos(ph), std::sin(ph)};
}

double nonstationary_tail_bound(double area, double amp_sup, double amp_grad_sup,
                                double hess_sup, double min_grad, double s, int n) {
    if (!(min_grad > 0.0) || !(s > 0.0) || n < 1)
        throw std::invalid_argument("nonstationary_tail_bound: bad arguments");
    if (amp_sup == 0.0) return 0.0;
    const double factor = amp_grad_sup / amp_sup + 3.0 * hess_sup / min_grad;
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return area * amp_sup * fact * std::pow(factor / (s * min_grad), n);
}

namespace {

complex simpson(const std::function<complex(double)>& f, double a, double b, complex fa,
                complex fm, complex fb, complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const complex fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
    const complex left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
    const complex right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
    const complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson(f, a, m, fa, fl, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, fr, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

complex integrate_time(const std::function<complex(double)>& G, double s_lo, double s_hi,
                       double tol) {
    if (!(s_hi > s_lo) || s_lo < 0.0)
        throw std::invalid_argument("integrate_time: bad bounds");
    auto f = [&](double u) -> complex {
        return u == 0.0 ? complex{0.0, 0.0} : 3.0 * u * u * G(u * u * u);
    };
    const double a = std::cbrt(s_lo), b = std::cbrt(s_hi);
    const double m = 0.5 * (a + b);
    const complex fa = f(a), fm = f(m), fb = f(b);
    const complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

complex oscillatory_tail(complex C, double alpha, int p, double s_lo, double s_hi) {
    if (!(s_lo > 0.0) || s_hi < s_lo)
        throw std::invalid_argument("oscillatory_tail: need 0 < s_lo <= s_hi");
    if (p == 1) {
        if (alpha == 0.0) return C * (s_hi - s_lo);
        const complex i{0.0, 1.0};
        return C * (std::exp(i * alpha * s_hi) - std::exp(i * alpha * s_lo)) / (i * alpha);
    }
    if (p != 0) throw std::invalid_argument("oscillatory_tail: p must be 0 or 1");
    if (alpha == 0.0) return C * std::log(s_hi / s_lo);
    const double aa = std::abs(alpha);
    const double dc = diff_ci(aa * s_lo, aa * s_hi);
    const double ds = diff_si(aa * s_lo, aa * s_hi);
    return C * complex{dc, alpha > 0.0 ? ds : -ds};
}

}  // namespace kgc
