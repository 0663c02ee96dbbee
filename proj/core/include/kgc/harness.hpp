#pragma once

// Experiment harness: flat key=value configuration, dyadic slope fitting,
// the exact rational exponent bookkeeping, named measurement suites, and
// report writers (CSV, JSON, SVG).

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kgc {

/// key=value configuration, one pair per line, '#' comments.  Every key must
/// be consumed by the run; finish() throws on leftovers so typos fail loudly.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;

    void finish() const;

  private:
    std::map<std::string, std::string> kv_;
    mutable std::set<std::string> used_;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double half_width = 0.0;  // two standard errors of the slope
};

/// Least-squares line through (x, y); needs at least 3 points.
FitResult fit_slope(const std::vector<std::pair<double, double>>& pts);

/// Exact rational arithmetic for the exponent bookkeeping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

/// One step of the exponent map c -> (2c + 2) / 3; fixed point 2.
Rational exponent_step(Rational c);

/// Orbit of the exponent map starting at 0, n entries.
std::vector<Rational> exponent_orbit(int n);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct SuiteResult {
    std::string name;
    std::vector<Table> tables;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();

/// Runs one named suite.  Unknown names throw.  The config supplies suite
/// parameters; defaults reproduce the standard measurement campaign.
SuiteResult run_suite(const std::string& name, const Config& cfg);

void write_csv(const SuiteResult& r, std::ostream& out);
void write_json(const SuiteResult& r, std::ostream& out);

/// Minimal line plot of one table column pair.
void write_svg_plot(const Table& t, int xcol, int ycol, std::ostream& out);

}  // namespace kgc
