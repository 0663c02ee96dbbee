#include "kgc/cisi.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace kgc {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kSplit = 4.0;

// E1(i x) by the modified Lentz continued fraction
//   E1(z) = e^{-z} / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...))))),
// accurate for |z| >= kSplit.
std::complex<double> e1_imag(double x) {
    const std::complex<double> z(0.0, x);
    const double tiny = 1e-290;
    std::complex<double> f = z, C = z, D = 0.0;
    for (int k = 1; k <= 200; ++k) {
        // two CF levels per k: partial numerator k over 1, then k over z
        for (int half = 0; half < 2; ++half) {
            const std::complex<double> a(double(k), 0.0);
            const std::complex<double> b = half == 0 ? std::complex<double>(1.0, 0.0) : z;
            D = b + a * D;
            if (std::abs(D) < tiny) D = tiny;
            C = b + a / C;
            if (std::abs(C) < tiny) C = tiny;
            D = 1.0 / D;
            const std::complex<double> delta = C * D;
            f *= delta;
            if (std::abs(delta - 1.0) < 1e-17) {
                return std::exp(-z) / f;
            }
        }
    }
    return std::exp(-z) / f;
}

double si_series(double x) {
    // sum (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
    double t = x;  // x^{2k+1}/(2k+1)!
    double s = x;
    for (int k = 1; k <= 40; ++k) {
        const double n = 2.0 * k + 1.0;
        t *= -x * x / ((n - 1.0) * n);
        const double add = t / n;
        s += add;
        if (std::abs(add) < 1e-18 * std::abs(s)) break;
    }
    return s;
}

double ci_series(double x) {
    // gamma + log x + sum (-1)^k x^{2k} / (2k (2k)!)
    double t = 1.0;  // x^{2k}/(2k)!
    double s = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const double n = 2.0 * k;
        t *= -x * x / ((n - 1.0) * n);
        const double add = t / n;
        s += add;
        if (std::abs(add) < 1e-18) break;
    }
    return kEulerGamma + std::log(x) + s;
}

}  // namespace

double si(double x) {
    if (x < 0.0) return -si(-x);
    if (x <= kSplit) return si_series(x);
    const std::complex<double> e1 = e1_imag(x);
    return M_PI / 2.0 + e1.imag();
}

double ci(double x) {
    if (!(x > 0.0)) throw std::domain_error("ci: argument must be positive");
    if (x <= kSplit) return ci_series(x);
    const std::complex<double> e1 = e1_imag(x);
    return -e1.real();
}

double diff_ci(double a, double b) {
    if (!(a > 0.0) || b < a) throw std::domain_error("diff_ci: need 0 < a <= b");
    return ci(b) - ci(a);
}

double diff_si(double a, double b) { return si(b) - si(a); }

}  // namespace kgc
