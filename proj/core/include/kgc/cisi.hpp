#pragma once

// Sine and cosine integrals, hand-rolled to near machine precision.
// Small arguments use the power series; large arguments use the continued
// fraction for the exponential integral of imaginary argument.

namespace kgc {

/// Si(x) = int_0^x sin(u)/u du.  Odd in x.
double si(double x);

/// Ci(x) = gamma + log x + int_0^x (cos u - 1)/u du, for x > 0.
double ci(double x);

/// int_a^b cos(u)/u du for 0 < a <= b; stays finite as differences of Ci.
double diff_ci(double a, double b);

/// int_a^b sin(u)/u du = Si(b) - Si(a).
double diff_si(double a, double b);

}  // namespace kgc
