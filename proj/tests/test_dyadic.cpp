#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kgc/dyadic.hpp"

using namespace kgc;

TEST_CASE("cutoff plateau, ramp and support") {
    CutoffSpec spec;
    CHECK(eval_phi(spec, 0.0) == 1.0);
    CHECK(eval_phi(spec, 1.1) == 1.0);
    CHECK(eval_phi(spec, -0.3) == 1.0);
    CHECK(eval_phi(spec, 1.2) == 0.0);
    CHECK(eval_phi(spec, 5.0) == 0.0);
    const double mid = eval_phi(spec, 1.15);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    // monotone on the ramp
    double prev = 1.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = eval_phi(spec, 1.1 + 0.1 * i / 100.0);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("cutoff ramp is C^4 at the junctions") {
    CutoffSpec spec;
    // finite-difference derivatives up to order 4 vanish at both ends
    const double h = 1e-2;
    for (double x0 : {1.1, 1.2}) {
        for (int order = 1; order <= 4; ++order) {
            // one-sided stencils reaching into the ramp only
            double acc = 0.0;
            for (int j = 0; j <= order; ++j) {
                const double sign = (order - j) % 2 == 0 ? 1.0 : -1.0;
                double binom = 1.0;
                for (int k = 0; k < j; ++k) binom = binom * (order - k) / (k + 1);
                const double x = x0 == 1.1 ? x0 - j * h : x0 + j * h;
                acc += sign * binom * eval_phi(spec, x);
            }
            // derivative of the flat side is exactly 0; smoothness means the
            // ramp-side one-sided derivative must be o(1) as h -> 0
            CHECK(std::abs(acc / std::pow(h, order)) < 1.0);
        }
    }
}

TEST_CASE("shell telescoping against the explicit sum") {
    CutoffSpec spec;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(1e-3, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double r = dist(rng);
        double acc = 0.0;
        for (int m = -40; m <= 10; ++m) acc += eval_phi_k(spec, m, r);
        // sum over m <= 10 telescopes to phi(r / 2^10)
        CHECK(acc == doctest::Approx(eval_phi(spec, r / 1024.0)).epsilon(1e-12));
        CHECK(eval_phi_interval(spec, DyadicInterval::at_most(10), r) ==
              doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("finite interval equals sum of shells") {
    CutoffSpec spec;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.01, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double r = dist(rng);
        double acc = 0.0;
        for (int m = -2; m <= 4; ++m) acc += eval_phi_k(spec, m, r);
        CHECK(eval_phi_interval(spec, DyadicInterval{-2, 4}, r) ==
              doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("full line interval is a partition of unity") {
    CutoffSpec spec;
    for (double r : {0.01, 0.5, 1.0, 3.7, 100.0}) {
        CHECK(eval_phi_interval(spec, DyadicInterval{}, r) == doctest::Approx(1.0));
    }
}

TEST_CASE("clamped family sums to one") {
    CutoffSpec spec;
    const int a = -1, b = 3;
    for (double r : {0.05, 0.3, 1.0, 2.2, 7.9, 30.0}) {
        double acc = 0.0;
        for (int j = a; j <= b; ++j) acc += eval_phi_clamped(spec, j, a, b, r);
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
    // end members match the half-infinite sums
    CHECK(eval_phi_clamped(spec, a, a, b, 0.8) ==
          doctest::Approx(eval_phi_interval(spec, DyadicInterval::at_most(a), 0.8)));
    CHECK(eval_phi_clamped(spec, b, a, b, 9.0) ==
          doctest::Approx(eval_phi_interval(spec, DyadicInterval::at_least(b), 9.0)));
}

TEST_CASE("projector masks samples by the shell") {
    CutoffSpec spec;
    SampledField field;
    for (double r = 0.05; r < 4.0; r += 0.05) {
        field.points.push_back({r, 0.0});
        field.values.push_back({1.0, 0.0});
    }
    const auto proj = project(spec, 0, field);
    CHECK(proj.support_r_lo == doctest::Approx(0.55));
    CHECK(proj.support_r_hi == doctest::Approx(1.2));
    for (size_t i = 0; i < proj.field.points.size(); ++i) {
        const double r = norm(proj.field.points[i]);
        const double expect = eval_phi_k(spec, 0, r);
        CHECK(proj.field.values[i].real() == doctest::Approx(expect));
    }
}

TEST_CASE("projector rejects samples that miss the shell") {
    CutoffSpec spec;
    SampledField narrow;
    narrow.points.push_back({0.9, 0.0});
    narrow.values.push_back({1.0, 0.0});
    CHECK_THROWS_AS(project(spec, 3, narrow), CoverageError);
}
