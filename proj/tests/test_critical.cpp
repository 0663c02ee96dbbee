#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kgc/critical.hpp"

using namespace kgc;

namespace {

long double naive_h(long double b) {
    return -2.0L * b / sqrtl(2.0L * b * b + 4.0L) + b / sqrtl(b * b + 1.0L);
}

}  // namespace

TEST_CASE("h matches extended-precision oracle across scales") {
    for (double b : {1e-6, 1e-4, 1e-2, 0.1375, 0.3, 0.5, 1.0, 3.0}) {
        const long double want = naive_h((long double)b);
        CHECK(h_eval(b, 0) == doctest::Approx((double)want).epsilon(1e-12));
    }
}

TEST_CASE("h has the cubic small-argument law") {
    for (double b : {1e-3, 1e-4, 1e-5}) {
        CHECK(h_eval(b, 0) / (-b * b * b / 4.0) == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("h' matches finite differences of h") {
    const double fd = 1e-6;
    for (double b : {0.0, 0.05, 0.1375, 0.3, 1.0}) {
        const double want = (h_eval(b + fd, 0) - h_eval(b - fd, 0)) / (2 * fd);
        CHECK(h_eval(b, 1) == doctest::Approx(want).epsilon(1e-7));
    }
}

TEST_CASE("h''' matches second differences of h'") {
    const double fd = 1e-3;
    for (double b : {0.0, 0.1, 0.2, 0.3}) {
        const double want =
            (h_eval(b + fd, 1) - 2 * h_eval(b, 1) + h_eval(b - fd, 1)) / (fd * fd);
        CHECK(h_eval(b, 3) == doctest::Approx(want).epsilon(1e-4));
    }
}

TEST_CASE("h'''' matches finite differences of h'''") {
    const double fd = 1e-5;
    for (double b : {0.05, 0.15, 0.25}) {
        const double want = (h_eval(b + fd, 3) - h_eval(b - fd, 3)) / (2 * fd);
        CHECK(h_eval(b, 4) == doctest::Approx(want).epsilon(1e-5));
    }
}

TEST_CASE("the two pinned derivative facts") {
    CHECK(h_eval(0.0, 3) == -1.5);
    const double hv = -h_eval(0.1375, 0);
    CHECK(hv > 0.0006);
    CHECK(hv < 0.0007);
}

TEST_CASE("fourth derivative is nonnegative on the working window") {
    for (int i = 0; i <= 10000; ++i) {
        CHECK(h_eval(0.3 * i / 10000.0, 4) >= 0.0);
    }
}

TEST_CASE("invalid derivative order rejected") {
    CHECK_THROWS_AS(h_eval(0.1, 2), std::invalid_argument);
}

TEST_CASE("critical point satisfies the closed-form inverse relation") {
    const auto t = f4_triple();
    for (double a : {1e-9, 1e-6, 1e-3, 0.05, 0.3}) {
        const auto cp = solve_critical_point(t, a);
        CHECK(cp.residual <= 1e-12);
        // the stationarity equation inverts to a = b - sqrt(2 b^2/(b^2+2))
        const double a_back = cp.b - std::sqrt(2.0 * cp.b * cp.b / (cp.b * cp.b + 2.0));
        CHECK(a_back == doctest::Approx(a).epsilon(1e-9));
    }
}

TEST_CASE("critical radius follows the cube-root law at small a") {
    const auto t = f4_triple();
    for (double a : {1e-9, 1e-12}) {
        const auto cp = solve_critical_point(t, a);
        CHECK(cp.b / std::cbrt(4.0 * a) == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("critical point solver rejects nonpositive input") {
    CHECK_THROWS_AS(solve_critical_point(f4_triple(), 0.0), std::invalid_argument);
}

TEST_CASE("annulus gradient floor is positive and lambda is range checked") {
    const auto t = f4_triple();
    CHECK_THROWS_AS(min_grad_on_annulus(t, 5, 1.0), std::domain_error);
    CHECK_THROWS_AS(min_grad_on_annulus(t, 5, -0.1), std::domain_error);
    const auto sc = min_grad_on_annulus(t, 15, 0.5);
    CHECK(sc.min_grad > 0.0);
    CHECK(sc.sampled_min >= sc.min_grad);
    // the certified floor must lie below any sampled value
    const double probe = std::exp2(3.0 * 0.5 * 15) *
                         norm(grad_eta_phi(t, Vec2{std::exp2(-45.0) * 0.5, 0.0},
                                           std::exp2(-0.5 * 15) * Vec2{1.3, 0.4}));
    CHECK(probe >= sc.min_grad);
}
