#include "kgc/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace kgc {
namespace {

// Binomial coefficient as a double; n stays small (<= 2*order+1).
double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * double(n - k + i) / double(i);
    return v;
}

// Generalized smoothstep S_N on [0,1]: degree 2N+1, C^N at both endpoints,
// S_N(0)=0, S_N(1)=1.
double smoothstep(int order, double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double acc = 0.0;
    for (int k = order; k >= 0; --k) {
        const double c = binom(order + k, k) * binom(2 * order + 1, order - k);
        acc = acc * (-u) + c;
    }
    // acc = sum_k C(N+k,k) C(2N+1,N-k) (-u)^k evaluated by Horner in (-u)
    return std::pow(u, order + 1) * acc;
}

}  // namespace

double eval_phi(const CutoffSpec& spec, double x) {
    const double r = std::abs(x);
    if (r <= spec.plateau_radius) return 1.0;
    if (r >= spec.support_radius) return 0.0;
    const double u = (r - spec.plateau_radius) / (spec.support_radius - spec.plateau_radius);
    return 1.0 - smoothstep(spec.smoothness_order, u);
}

double eval_phi_k(const CutoffSpec& spec, int k, double r) {
    return eval_phi(spec, std::ldexp(r, -k)) - eval_phi(spec, std::ldexp(r, -(k - 1)));
}

double eval_phi_interval(const CutoffSpec& spec, DyadicInterval I, double r) {
    // sum_{m<=M} phi_m telescopes to phi(|x|/2^M); a finite interval is the
    // difference of two such tails.
    const bool lo_inf = !std::isfinite(I.lo);
    const bool hi_inf = !std::isfinite(I.hi);
    if (lo_inf && hi_inf) return r > 0.0 ? 1.0 : 0.0;
    const int a = lo_inf ? 0 : int(std::ceil(I.lo));
    const int b = hi_inf ? 0 : int(std::floor(I.hi));
    if (!lo_inf && !hi_inf && a > b) return 0.0;
    const double upper = hi_inf ? 1.0 : eval_phi(spec, std::ldexp(r, -b));
    const double lower = lo_inf ? 0.0 : eval_phi(spec, std::ldexp(r, -(a - 1)));
    return upper - lower;
}

double eval_phi_clamped(const CutoffSpec& spec, int j, int a, int b, double r) {
    if (j == a) return eval_phi_interval(spec, DyadicInterval::at_most(a), r);
    if (j == b) return eval_phi_interval(spec, DyadicInterval::at_least(b), r);
    return eval_phi_k(spec, j, r);
}

namespace {

ProjectedField apply_mask(const SampledField& field, double r_lo, double r_hi,
                          const std::vector<double>& mask) {
    ProjectedField out;
    out.support_r_lo = r_lo;
    out.support_r_hi = r_hi;
    out.field.points = field.points;
    out.field.values.resize(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i)
        out.field.values[i] = mask[i] * field.values[i];
    return out;
}

void check_coverage(const SampledField& field, double r_lo, double r_hi) {
    if (field.points.size() != field.values.size())
        throw std::invalid_argument("SampledField: points/values size mismatch");
    double min_r = std::numeric_limits<double>::infinity();
    double max_r = 0.0;
    for (const Vec2& p : field.points) {
        const double r = norm(p);
        min_r = std::min(min_r, r);
        max_r = std::max(max_r, r);
    }
    if (field.points.empty() || min_r > r_lo || max_r < r_hi)
        throw CoverageError("projector: sample grid does not cover the shell support");
}

}  // namespace

ProjectedField project(const CutoffSpec& spec, int k, const SampledField& field) {
    const double r_lo = 0.5 * spec.plateau_radius * std::ldexp(1.0, k);
    const double r_hi = spec.support_radius * std::ldexp(1.0, k);
    check_coverage(field, r_lo, r_hi);
    std::vector<double> mask(field.points.size());
    for (std::size_t i = 0; i < field.points.size(); ++i)
        mask[i] = eval_phi_k(spec, k, field.points[i]);
    return apply_mask(field, r_lo, r_hi, mask);
}

ProjectedField project(const CutoffSpec& spec, DyadicInterval I, const SampledField& field) {
    const double r_lo = std::isfinite(I.lo)
                            ? 0.5 * spec.plateau_radius * std::ldexp(1.0, int(std::ceil(I.lo)))
                            : 0.0;
    const double r_hi = std::isfinite(I.hi)
                            ? spec.support_radius * std::ldexp(1.0, int(std::floor(I.hi)))
                            : std::numeric_limits<double>::infinity();
    if (std::isfinite(r_hi)) check_coverage(field, std::max(r_lo, 1e-300), r_hi);
    std::vector<double> mask(field.points.size());
    for (std::size_t i = 0; i < field.points.size(); ++i)
        mask[i] = eval_phi_interval(spec, I, norm(field.points[i]));
    return apply_mask(field, r_lo, r_hi, mask);
}

}  // namespace kgc
