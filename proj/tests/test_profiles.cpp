#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "kgc/profiles.hpp"

using namespace kgc;

TEST_CASE("seed profile is the unit bump on the Fourier side") {
    const auto seed = g0_init(0.01);
    CHECK(seed.epsilon == 0.01);
    CHECK(seed.fourier_at(Vec2{0.5, 0.0}) == 1.0);
    CHECK(seed.fourier_at(Vec2{0.0, 1.05}) == 1.0);
    CHECK(seed.fourier_at(Vec2{1.3, 0.0}) == 0.0);
    CHECK_THROWS_AS(g0_init(0.0), std::invalid_argument);
}

TEST_CASE("window conjugation flags follow the mass signs") {
    const auto w4 = duhamel_window(f4_triple());
    CHECK_FALSE(w4.conj_first);   // mu mass +2
    CHECK(w4.conj_second);        // nu mass -1
    const auto w5 = duhamel_window(f5_triple());
    CHECK_FALSE(w5.conj_first);
    CHECK(w5.conj_second);
}

TEST_CASE("window support is the product of the seed supports") {
    WindowSpec w{CutoffSpec{}, false, false};
    CHECK(w.eval(Vec2{0.2, 0.0}, Vec2{0.1, 0.0}) == 1.0);
    CHECK(w.eval(Vec2{0.0, 0.0}, Vec2{1.3, 0.0}) == 0.0);   // second factor dead
    CHECK(w.eval(Vec2{2.6, 0.0}, Vec2{1.0, 0.0}) == 0.0);   // first factor dead
    // both factors on their ramps
    const double v = w.eval(Vec2{0.0, 0.0}, Vec2{1.15, 0.0});
    CHECK(v > 0.0);
    CHECK(v < 1.0);
}

TEST_CASE("cascade wiring validates and rejects tampering") {
    auto sys = cascade_system();
    REQUIRE(sys.entries.size() == 3);
    CHECK_NOTHROW(sys.validate());
    CHECK(sys.entries[0].output == "f4");
    CHECK(sys.entries[1].output == "f5");
    CHECK(sys.entries[2].output == "f6");
    CHECK(sys.entries[2].input_first == "f4");
    CHECK(sys.entries[2].input_second == "f5");
    for (const auto& e : sys.entries) CHECK(e.conj_second);
    sys.entries[1].conj_second = false;
    CHECK_THROWS_AS(sys.validate(), std::logic_error);
}

TEST_CASE("profile vanishes exactly outside the convolution support") {
    FirstIterationEngine eng(f4_triple(), g0_init(1.0));
    CHECK(support_check(eng, 2.4, 32.0));
    const auto v = eng.direct(Vec2{2.5, 0.0}, 32.0);
    CHECK(v.value == complex{0.0, 0.0});
    CHECK(eng.mid_frequency_sup(2, 64.0) == 0.0);
    CHECK(eng.mid_frequency_sup(5, 64.0) == 0.0);
}

TEST_CASE("amplitude scaling in the seed height is exactly quadratic") {
    EngineConfig cfg;
    cfg.quad_rel_tol = 1e-5;
    cfg.time_rel_tol = 1e-5;
    FirstIterationEngine a(f4_triple(), g0_init(0.5), cfg);
    FirstIterationEngine b(f4_triple(), g0_init(1.0), cfg);
    const double l = 3.0, t = 5.0 * std::exp2(4.0 * l);
    const auto va = a.value(Vec2{1.0, 0.0}, l, t);
    const auto vb = b.value(Vec2{1.0, 0.0}, l, t);
    CHECK(vb.value.real() == 4.0 * va.value.real());
    CHECK(vb.value.imag() == 4.0 * va.value.imag());
}

TEST_CASE("inner integrand matches a fixed-grid quadrature") {
    // Depth 2 keeps the window support inside the quadrature domain, so a
    // plain midpoint grid in the rescaled variable is a complete oracle.
    FirstIterationEngine eng(f4_triple(), g0_init(1.0));
    const double l = 2.0, s_prime = 2.0;
    const Vec2 xp{0.8, 0.0};
    const complex got = eng.inner_integrand(xp, l, s_prime);

    const InteractionTriple tr = f4_triple();
    const WindowSpec w = duhamel_window(tr);
    const double xs = std::exp2(-3.0 * l), es = std::exp2(-l);
    const Vec2 xi = xs * xp;
    const RescaleParams rp{int(l), 1.0, 3};
    auto sum_grid = [&](int nr, int nth) {
        const double rmax = 1.2 * std::exp2(l);
        complex acc{0.0, 0.0};
        for (int i = 0; i < nr; ++i) {
            const double r = (i + 0.5) * rmax / nr;
            complex row{0.0, 0.0};
            for (int j = 0; j < nth; ++j) {
                const double th = 2.0 * M_PI * (j + 0.5) / nth;
                const Vec2 ep = polar(r, th);
                const double amp = w.eval(xi, es * ep);
                if (amp == 0.0) continue;
                const double ph = s_prime * rescaled_phi(rp, tr, xp, ep);
                row += amp * complex{std::cos(ph), std::sin(ph)};
            }
            acc += r * row;
        }
        return acc * (rmax / nr) * (2.0 * M_PI / nth) * (es * es);
    };
    const complex bf1 = sum_grid(1600, 3200);
    const complex bf2 = sum_grid(1100, 2200);
    const double bf_err = std::abs(bf1 - bf2);
    CHECK(std::abs(got - bf1) <= 5.0 * bf_err + 1e-5 * std::abs(bf1) + 1e-12);
}

TEST_CASE("profile grid round trips through its file format") {
    FirstIterationEngine eng(f4_triple(), g0_init(1.0));
    const int l = 3;
    ProfileGrid g("f4", &eng, l, 0.8, 1.2, 6);
    const std::string path = "profile_grid_rt.txt";
    g.export_file(path);
    const ProfileGrid h = ProfileGrid::import_file(path, &eng);
    std::remove(path.c_str());
    CHECK(h.id() == "f4");
    CHECK(h.l() == l);
    REQUIRE(h.nodes().size() == g.nodes().size());
    const double s = 100.0 * std::exp2(4.0 * l);
    for (double u : {0.85, 1.0, 1.15}) {
        const complex a = g.at(u, s);
        const complex b = h.at(u, s);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
    CHECK_THROWS_AS(ProfileGrid::import_file("no_such_grid_file.txt", &eng),
                    std::runtime_error);
}

TEST_CASE("grid values agree with the engine at a node radius") {
    FirstIterationEngine eng(f4_triple(), g0_init(1.0));
    const int l = 3;
    ProfileGrid g("f4", &eng, l, 0.9, 1.1, 6);
    const double u = 1.0;  // interior query radius
    const double s = 200.0 * std::exp2(4.0 * l);
    const complex gv = g.at(u, s);
    const auto ev = eng.value(Vec2{u, 0.0}, double(l), s);
    CHECK(std::abs(gv - ev.value) <=
          0.05 * std::abs(ev.value) + 10.0 * ev.error_estimate);
    // snapshot interpolation is the same function as the per-point path
    const auto snap = g.snapshot(s);
    CHECK(std::abs(g.at_snapshot(snap, u) - gv) <= 1e-12 * std::abs(gv));
}
