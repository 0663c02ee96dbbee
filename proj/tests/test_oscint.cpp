#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kgc/oscint.hpp"

using namespace kgc;

namespace {

OscIntegrand gaussian_quadratic() {
    OscIntegrand f;
    f.amplitude = [](Vec2 p) -> complex { return std::exp(-norm2(p)); };
    f.phase = [](Vec2 p) { return 0.5 * norm2(p); };
    f.phase_grad = [](Vec2 p) { return p; };
    return f;
}

// Polar midpoint brute force, the independent oracle for the adaptive engine.
complex brute_force(const OscIntegrand& f, double s, double r_lo, double r_hi, int n) {
    complex acc{0.0, 0.0};
    const double dr = (r_hi - r_lo) / n, dt = 2.0 * M_PI / n;
    for (int i = 0; i < n; ++i) {
        const double r = r_lo + (i + 0.5) * dr;
        complex row{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            const double th = (j + 0.5) * dt;
            const Vec2 p{r * std::cos(th), r * std::sin(th)};
            const double ph = s * f.phase(p);
            row += f.amplitude(p) * complex{std::cos(ph), std::sin(ph)};
        }
        acc += r * row;
    }
    return acc * (dr * dt);
}

double bump(double q) { return q < 1.0 ? std::exp(-1.0 / (1.0 - q)) : 0.0; }

}  // namespace

TEST_CASE("gaussian with quadratic phase matches the closed form") {
    const auto f = gaussian_quadratic();
    QuadratureConfig cfg;
    for (double s : {0.0, 1.0, 10.0, 50.0}) {
        const auto res = integrate_annulus(f, s, 0.0, 8.0, cfg);
        const complex want = M_PI / complex{1.0, -0.5 * s};
        CHECK(std::abs(res.value - want) < 1e-7);
        CHECK(res.converged);
    }
}

TEST_CASE("adaptive engine matches brute force on a smooth bump") {
    OscIntegrand f;
    f.amplitude = [](Vec2 p) -> complex { return bump(norm2(p - Vec2{0.3, 0.1})); };
    f.phase = [](Vec2 p) { return p.x * p.x - 0.5 * p.y * p.y + 0.2 * p.x * p.y; };
    f.phase_grad = [](Vec2 p) {
        return Vec2{2.0 * p.x + 0.2 * p.y, -p.y + 0.2 * p.x};
    };
    QuadratureConfig cfg;
    for (double s : {7.0, 30.0}) {
        const auto res = integrate_annulus(f, s, 0.0, 2.0, cfg);
        const complex bf1 = brute_force(f, s, 0.0, 2.0, 1024);
        const complex bf2 = brute_force(f, s, 0.0, 2.0, 512);
        const double bf_err = std::abs(bf1 - bf2);
        CHECK(std::abs(res.value - bf1) <= 3.0 * (res.error_estimate + bf_err) + 1e-10);
    }
}

TEST_CASE("identical inputs give bit-identical results") {
    const auto f = gaussian_quadratic();
    QuadratureConfig cfg;
    const auto a = integrate_annulus(f, 23.0, 0.0, 5.0, cfg);
    const auto b = integrate_annulus(f, 23.0, 0.0, 5.0, cfg);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.cells == b.cells);
}

TEST_CASE("bad radial bounds are rejected") {
    const auto f = gaussian_quadratic();
    QuadratureConfig cfg;
    CHECK_THROWS_AS(integrate_annulus(f, 1.0, 2.0, 1.0, cfg), std::invalid_argument);
}

TEST_CASE("stationary phase term matches the integral for a saddle") {
    OscIntegrand f;
    f.amplitude = [](Vec2 p) -> complex { return std::exp(-norm2(p)); };
    f.phase = [](Vec2 p) { return 0.5 * (p.x * p.x - p.y * p.y); };
    f.phase_grad = [](Vec2 p) { return Vec2{p.x, -p.y}; };
    QuadratureConfig cfg;
    // The check is against an O(1/s) asymptotic at 5%, so a tolerance far
    // below that only burns cells.
    cfg.rel_tol = 1e-6;
    for (double s : {50.0, 200.0}) {
        const auto res = integrate_annulus(f, s, 0.0, 8.0, cfg);
        CHECK(res.converged);
        const complex sp = stationary_phase_eval(s, complex{1.0, 0.0}, 0.0,
                                                 Mat2{1.0, 0.0, -1.0});
        CHECK(std::abs(res.value - sp) / std::abs(sp) < 0.05);
    }
}

TEST_CASE("stationary phase rejects a singular Hessian") {
    CHECK_THROWS_AS(stationary_phase_eval(10.0, complex{1.0, 0.0}, 0.0,
                                          Mat2{1.0, 1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("nonstationary tail bound is sound on random linear-phase configs") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> vmag(0.5, 2.0), ang(0.0, 6.28318),
        smag(20.0, 120.0);
    QuadratureConfig cfg;
    // The bound typically has orders of magnitude of slack, so modest
    // quadrature accuracy suffices and keeps the sweep fast.
    cfg.rel_tol = 1e-5;
    int violations = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const Vec2 v = polar(vmag(rng), ang(rng));
        const double s = smag(rng);
        OscIntegrand f;
        f.amplitude = [](Vec2 p) -> complex {
            const double r = norm(p);
            return r > 1.0 && r < 2.0 ? std::exp(-1.0 / ((r - 1.0) * (2.0 - r))) : 0.0;
        };
        f.phase = [v](Vec2 p) { return dot(v, p); };
        f.phase_grad = [v](Vec2) { return v; };
        const auto res = integrate_annulus(f, s, 1.0, 2.0, cfg);
        // amplitude statistics on a fine radial grid
        double amp_sup = 0.0, amp_grad_sup = 0.0;
        for (int i = 1; i < 4000; ++i) {
            const double r = 1.0 + i / 4000.0;
            const double a0 = std::abs(f.amplitude(Vec2{r, 0.0}).real());
            const double a1 = std::abs(f.amplitude(Vec2{r + 2.5e-4, 0.0}).real());
            amp_sup = std::max(amp_sup, a0);
            amp_grad_sup = std::max(amp_grad_sup, std::abs(a1 - a0) / 2.5e-4);
        }
        const double area = M_PI * 3.0;
        const double bound =
            nonstationary_tail_bound(area, amp_sup, amp_grad_sup, 0.0, norm(v), s, 2);
        if (std::abs(res.value) > bound) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("tail bound argument validation") {
    CHECK_THROWS_AS(nonstationary_tail_bound(1.0, 1.0, 1.0, 0.0, 0.0, 10.0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonstationary_tail_bound(1.0, 1.0, 1.0, 0.0, 1.0, 10.0, 0),
                    std::invalid_argument);
}

TEST_CASE("time integration handles the inverse power singularity") {
    auto G = [](double s) -> complex { return std::pow(s, -2.0 / 3.0); };
    const complex got = integrate_time(G, 0.0, 1.0, 1e-10);
    CHECK(got.real() == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(got.imag() == doctest::Approx(0.0));
}

TEST_CASE("time integration of a pure oscillation") {
    auto G = [](double s) -> complex { return complex{std::cos(s), std::sin(s)}; };
    const complex want = (complex{std::cos(7.0), std::sin(7.0)} - 1.0) / complex{0.0, 1.0};
    const complex got = integrate_time(G, 0.0, 7.0, 1e-10);
    CHECK(std::abs(got - want) < 1e-8);
}

TEST_CASE("oscillatory tails match direct quadrature") {
    auto oracle = [](complex C, double alpha, int p, double a, double b) {
        const int n = 400000;
        complex acc{0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            const double s = a + (b - a) * (i + 0.5) / n;
            const double w = p == 0 ? 1.0 / s : 1.0;
            acc += C * complex{std::cos(alpha * s), std::sin(alpha * s)} * w;
        }
        return acc * ((b - a) / n);
    };
    const complex C{0.7, -0.2};
    for (double alpha : {1.3, -0.8}) {
        for (int p : {0, 1}) {
            const complex got = oscillatory_tail(C, alpha, p, 2.0, 40.0);
            const complex want = oracle(C, alpha, p, 2.0, 40.0);
            CHECK(std::abs(got - want) < 1e-6);
        }
    }
    CHECK(std::abs(oscillatory_tail(C, 0.0, 0, 2.0, 4.0) - C * std::log(2.0)) < 1e-14);
    CHECK_THROWS_AS(oscillatory_tail(C, 1.0, 2, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(oscillatory_tail(C, 1.0, 0, 0.0, 2.0), std::invalid_argument);
}
