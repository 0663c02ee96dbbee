#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "kgc/harness.hpp"

using namespace kgc;

TEST_CASE("config parses, tracks usage, and rejects leftovers") {
    const auto cfg = Config::from_string(
        "# comment line\n"
        "l_min = 4\n"
        "tol=1.5e-3\n"
        "mode = fast  # trailing comment\n"
        "\n");
    CHECK(cfg.integer("l_min", 0) == 4);
    CHECK(cfg.number("tol", 0.0) == 1.5e-3);
    CHECK(cfg.text("mode", "") == "fast");
    CHECK(cfg.number("absent", 7.0) == 7.0);
    CHECK_NOTHROW(cfg.finish());

    const auto partial = Config::from_string("a=1\nb=2\n");
    CHECK(partial.integer("a", 0) == 1);
    CHECK_THROWS_AS(partial.finish(), std::runtime_error);

    CHECK_THROWS_AS(Config::from_string("a=1\na=2\n"), std::runtime_error);
    CHECK_THROWS_AS(Config::from_string("novalue\n"), std::runtime_error);
    CHECK_THROWS_AS(Config::from_file("no_such_config.cfg"), std::runtime_error);
}

TEST_CASE("slope fit recovers an exact line") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(i, 3.0 - 2.5 * i);
    const auto fit = fit_slope(pts);
    CHECK(fit.slope == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.half_width == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(fit_slope({{0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays exact along the exponent orbit") {
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational(2, 1).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    const auto orbit = exponent_orbit(12);
    REQUIRE(orbit.size() == 12);
    CHECK(orbit[0] == Rational(0, 1));
    CHECK(orbit[1] == Rational(2, 3));
    CHECK(orbit[2] == Rational(10, 9));
    // closed form: c_n = 2 - 2 (2/3)^n, i.e. (2 3^n - 2^{n+1}) / 3^n
    long long p3 = 1, p2 = 2;
    for (size_t n = 0; n < orbit.size(); ++n) {
        CHECK(orbit[n] == Rational(2 * p3 - p2, p3));
        p3 *= 3;
        p2 *= 2;
    }
    CHECK(exponent_step(Rational(2, 1)) == Rational(2, 1));
}

TEST_CASE("suite registry is complete and rejects unknown names") {
    const auto names = suite_names();
    CHECK(names.size() == 11);
    for (const char* n : {"degeneracy-scan", "exponent-map", "blowup-demo"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite", Config{}), std::invalid_argument);
}

TEST_CASE("exponent-map suite passes and reports its orbit") {
    const auto r = run_suite("exponent-map", Config{});
    CHECK(r.pass());
    CHECK(!r.checks.empty());
    REQUIRE(!r.tables.empty());
    CHECK(r.tables[0].rows.size() >= 10);
}

TEST_CASE("report writers produce well-formed output") {
    SuiteResult r;
    r.name = "demo";
    r.tables.push_back(Table{"growth", {"l", "log2_norm"}, {{3.0, 1.1}, {4.0, 2.2}, {5.0, 3.0}}});
    r.checks.push_back(Check{"slope", true, "fitted 1.0"});
    r.checks.push_back(Check{"range", false, "out of band"});

    std::ostringstream csv;
    write_csv(r, csv);
    CHECK(csv.str().rfind("# kgcascade-report v1", 0) == 0);
    CHECK(csv.str().find("growth") != std::string::npos);
    CHECK(csv.str().find("log2_norm") != std::string::npos);

    std::ostringstream js;
    write_json(r, js);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc.at("suite") == "demo");
    CHECK(doc.at("pass") == false);
    CHECK(doc.at("checks").size() == 2);
    CHECK(doc.at("tables")[0].at("rows").size() == 3);

    std::ostringstream svg;
    write_svg_plot(r.tables[0], 0, 1, svg);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("polyline") != std::string::npos);
    CHECK(svg.str().find("</svg>") != std::string::npos);
}
