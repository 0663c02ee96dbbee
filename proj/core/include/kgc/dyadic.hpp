#pragma once

// Littlewood-Paley cutoffs: the smooth radial bump phi, its dyadic shells
// phi_k, interval sums phi_I, the clamped family phi_j^[a,b], and frequency
// projectors acting on sampled fields.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kgc/geometry.hpp"

namespace kgc {

/// Radial bump: 1 on [-plateau_radius, plateau_radius], 0 outside
/// [-support_radius, support_radius], with a C^smoothness_order polynomial ramp.
struct CutoffSpec {
    double plateau_radius = 1.1;
    double support_radius = 1.2;
    int smoothness_order = 4;
};

double eval_phi(const CutoffSpec& spec, double x);

/// phi_k(x) = phi(|x|/2^k) - phi(|x|/2^{k-1}); supported in
/// {0.55*2^k <= |x| <= 1.2*2^k} for the default spec.
double eval_phi_k(const CutoffSpec& spec, int k, double r);
inline double eval_phi_k(const CutoffSpec& spec, int k, Vec2 x) {
    return eval_phi_k(spec, k, norm(x));
}

/// Integer interval, possibly half-infinite on either side.
struct DyadicInterval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static DyadicInterval at_most(double c) { return {-std::numeric_limits<double>::infinity(), c}; }
    static DyadicInterval at_least(double c) { return {c, std::numeric_limits<double>::infinity()}; }
};

/// phi_I(x) = sum over integers m in I of phi_m(x).  Evaluated in closed
/// (telescoped) form; the invariant test checks the equality with the sum.
double eval_phi_interval(const CutoffSpec& spec, DyadicInterval I, double r);

/// Clamped family phi_j^[a,b]: phi_{<=a} at j=a, phi_{>=b} at j=b, phi_j inside.
double eval_phi_clamped(const CutoffSpec& spec, int j, int a, int b, double r);

/// A 2D Fourier-space function sampled at scattered points.
struct SampledField {
    std::vector<Vec2> points;
    std::vector<complex> values;
};

/// Samples with a shell mask applied; the support annulus tags along so that
/// downstream code does not have to re-derive it.
struct ProjectedField {
    SampledField field;
    double support_r_lo = 0.0;
    double support_r_hi = 0.0;
};

struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// P_k: pointwise multiplication by phi_k in frequency space.  Throws
/// CoverageError when the sample set does not reach across the shell.
ProjectedField project(const CutoffSpec& spec, int k, const SampledField& field);
ProjectedField project(const CutoffSpec& spec, DyadicInterval I, const SampledField& field);

}  // namespace kgc
