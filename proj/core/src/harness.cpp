#include "kgc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kgc/critical.hpp"
#include "kgc/profiles.hpp"

namespace kgc {
namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::from_string(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": empty key");
        if (c.kv_.count(key))
            throw std::runtime_error("config: duplicate key '" + key + "'");
        c.kv_[key] = val;
    }
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

double Config::number(const std::string& key, double fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    used_.insert(key);
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size())
        throw std::runtime_error("config: key '" + key + "' is not a number");
    return v;
}

int Config::integer(const std::string& key, int fallback) const {
    const double v = number(key, double(fallback));
    if (v != std::floor(v))
        throw std::runtime_error("config: key '" + key + "' is not an integer");
    return int(v);
}

std::string Config::text(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    used_.insert(key);
    return it->second;
}

void Config::finish() const {
    std::string leftovers;
    for (const auto& [k, v] : kv_)
        if (!used_.count(k)) leftovers += (leftovers.empty() ? "" : ", ") + k;
    if (!leftovers.empty())
        throw std::runtime_error("config: unknown keys: " + leftovers);
}

FitResult fit_slope(const std::vector<std::pair<double, double>>& pts) {
    const size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("fit_slope: need at least 3 points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : pts) { sx += x; sy += y; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_slope: degenerate abscissae");
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : pts) {
        const double res = y - (r.intercept + r.slope * x);
        ss += res * res;
    }
    r.half_width = 2.0 * std::sqrt(ss / double(n - 2) / sxx);
    return r;
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
}

Rational exponent_step(Rational c) {
    return Rational(2 * c.num + 2 * c.den, 3 * c.den);
}

std::vector<Rational> exponent_orbit(int n) {
    std::vector<Rational> orbit;
    Rational c(0, 1);
    for (int i = 0; i < n; ++i) {
        orbit.push_back(c);
        c = exponent_step(c);
    }
    return orbit;
}

namespace {

Check mk_check(const std::string& name, bool pass, const std::string& detail) {
    return Check{name, pass, detail};
}

std::string num_str(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

EngineConfig engine_config(const Config& cfg) {
    EngineConfig ec;
    ec.s_cut = cfg.number("s_cut", ec.s_cut);
    ec.quad_rel_tol = cfg.number("quad_rel_tol", ec.quad_rel_tol);
    ec.time_rel_tol = cfg.number("time_rel_tol", ec.time_rel_tol);
    ec.osc_threshold = cfg.number("osc_threshold", ec.osc_threshold);
    ec.domain_coef = cfg.number("domain_coef", ec.domain_coef);
    ec.domain_floor = cfg.number("domain_floor", ec.domain_floor);
    ec.domain_cap = cfg.number("domain_cap", ec.domain_cap);
    return ec;
}

double stab_time(const EngineConfig& ec, double l, double exponent, double mult) {
    return mult * ec.s_cut * std::exp2(exponent * l);
}

SuiteResult suite_degeneracy(const Config& cfg) {
    (void)cfg;
    SuiteResult r{"degeneracy-scan", {}, {}};
    Table t{"triples",
            {"triple", "phi0", "grad0", "hessdet0", "cond1", "cond2", "kappa"},
            {}};
    int idx = 0;
    for (const auto& tr : {f4_triple(), f5_triple()}) {
        const auto rep = degeneracy_report(tr);
        const auto probe = taylor_probe(tr);
        t.rows.push_back({double(idx), rep.phi_at_origin, norm(rep.grad_eta_at_origin),
                          rep.hess_det_at_origin, rep.condition1_holds ? 1.0 : 0.0,
                          rep.condition2_holds ? 1.0 : 0.0, probe.kappa});
        const std::string id = idx == 0 ? "first" : "second";
        // Exact mass cancellation gives exact zeros for phi and the gradient;
        // the determinant picks up rounding from the irrational speeds.
        const bool deg = std::abs(rep.phi_at_origin) <= 1e-14 &&
                         norm(rep.grad_eta_at_origin) <= 1e-12 &&
                         std::abs(rep.hess_det_at_origin) <= 1e-12;
        r.checks.push_back(mk_check("degenerate-" + id, deg,
                                    "phi0=" + num_str(rep.phi_at_origin) +
                                        " hessdet0=" + num_str(rep.hess_det_at_origin)));
        r.checks.push_back(mk_check("condition1-violated-" + id, !rep.condition1_holds,
                                    "b_sigma - b_mu - b_nu = 0"));
        r.checks.push_back(mk_check("condition2-violated-" + id, !rep.condition2_holds, ""));
        r.checks.push_back(mk_check("kappa-near-one-" + id,
                                    std::abs(probe.kappa - 1.0) < 1e-6,
                                    "kappa=" + num_str(probe.kappa)));
        ++idx;
    }
    // A generic perturbed triple must fail the exact degeneracy.
    InteractionTriple pert = f4_triple();
    pert.nu.b = -1.05;
    const auto rep = degeneracy_report(pert);
    r.checks.push_back(
        mk_check("perturbed-not-degenerate", !rep.degenerate(1e-6),
                 "phi0=" + num_str(rep.phi_at_origin)));
    r.tables.push_back(t);
    return r;
}

SuiteResult suite_lemma21(const Config& cfg) {
    SuiteResult r{"lemma21-scan", {}, {}};
    const double h3 = h_eval(0.0, 3);
    r.checks.push_back(mk_check("third-derivative-at-zero", h3 == -1.5,
                                "h'''(0)=" + num_str(h3)));
    const double hv = -h_eval(0.1375, 0);
    r.checks.push_back(mk_check("obstruction-window",
                                hv > 0.0006 && hv < 0.0007,
                                "-h(0.1375)=" + num_str(hv)));
    const int n4 = cfg.integer("fourth_grid", 10000);
    double min4 = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n4; ++i) min4 = std::min(min4, h_eval(0.3 * i / n4, 4));
    r.checks.push_back(mk_check("fourth-derivative-nonnegative", min4 >= 0.0,
                                "min=" + num_str(min4)));
    Table t{"grad-floor", {"l", "lambda", "min_grad", "sampled_min"}, {}};
    bool all_pos = true;
    std::string bad;
    const auto tr = f4_triple();
    for (int l : {15, 25, 40})
        for (double lam : {0.0, 0.25, 0.5, 0.75, 0.99}) {
            const auto sc = min_grad_on_annulus(tr, l, lam);
            t.rows.push_back({double(l), lam, sc.min_grad, sc.sampled_min});
            if (!(sc.min_grad > 0.0)) {
                all_pos = false;
                bad += " l=" + std::to_string(l) + ",lambda=" + num_str(lam) +
                       ",floor=" + num_str(sc.min_grad);
            }
        }
    r.checks.push_back(mk_check("rescaled-grad-positive", all_pos,
                                all_pos ? "" : "zero inside annulus:" + bad));
    r.tables.push_back(t);
    return r;
}

SuiteResult suite_critical(const Config& cfg) {
    SuiteResult r{"critical-point", {}, {}};
    const int l_min = cfg.integer("l_min", 4), l_max = cfg.integer("l_max", 10);
    Table t{"radial-roots", {"l", "a", "b", "residual", "phi_rescaled"}, {}};
    std::vector<std::pair<double, double>> pts;
    double max_res = 0.0;
    bool phase_resolved = true;
    const auto tr = f4_triple();
    for (int l = l_min; l <= l_max; ++l) {
        const double a = std::exp2(-3.0 * l);
        const auto cp = solve_critical_point(tr, a);
        const double phi_rs = std::exp2(4.0 * l) * cp.phi_value;
        t.rows.push_back({double(l), a, cp.b, cp.residual, phi_rs});
        pts.push_back({double(l), std::log2(cp.b)});
        max_res = std::max(max_res, cp.residual);
        // Uncertainty of the rescaled phase from the residual root error.
        const double d = hess_eta_phi(tr, Vec2{a, 0.0}, Vec2{cp.b, 0.0}).xx;
        const double db = d != 0.0 ? cp.residual / std::abs(d) : 0.0;
        const double dphi = std::exp2(4.0 * l) * cp.residual * db;
        phase_resolved = phase_resolved && std::abs(phi_rs) > 10.0 * dphi;
    }
    const auto fit = fit_slope(pts);
    r.checks.push_back(mk_check("residuals-small", max_res <= 1e-12,
                                "max=" + num_str(max_res)));
    r.checks.push_back(mk_check("root-slope", std::abs(fit.slope + 1.0) <= 0.02,
                                "slope=" + num_str(fit.slope)));
    r.checks.push_back(mk_check("rescaled-phase-resolved", phase_resolved, ""));
    r.tables.push_back(t);
    Table f{"fit", {"slope", "intercept", "half_width"}, {{fit.slope, fit.intercept, fit.half_width}}};
    r.tables.push_back(f);
    return r;
}

SuiteResult suite_first_iteration(const Config& cfg) {
    SuiteResult r{"first-iteration", {}, {}};
    const int l_min = cfg.integer("l_min", 4), l_max = cfg.integer("l_max", 8);
    const double eps = cfg.number("epsilon", 0.1);
    const EngineConfig ec = engine_config(cfg);
    FirstIterationEngine eng(f4_triple(), g0_init(eps), ec);
    Table t{"growth", {"l", "abs_value", "normalized"}, {}};
    std::vector<std::pair<double, double>> pts;
    for (int l = l_min; l <= l_max; ++l) {
        const double tt = stab_time(ec, l, 4.0, 4.0);
        const auto v = eng.value(Vec2{1.0, 0.0}, l, tt);
        const double av = std::abs(v.value);
        t.rows.push_back({double(l), av, av / (eps * eps * std::exp2(2.0 * l))});
        pts.push_back({double(l), std::log2(av)});
    }
    const auto fit = fit_slope(pts);
    r.checks.push_back(mk_check("growth-slope", std::abs(fit.slope - 2.0) <= 0.15,
                                "slope=" + num_str(fit.slope)));
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
    for (const auto& row : t.rows) {
        cmin = std::min(cmin, row[2]);
        cmax = std::max(cmax, row[2]);
    }
    r.checks.push_back(mk_check("constant-bounded", cmax > 0.0 && cmax / cmin <= 3.0,
                                "ratio=" + num_str(cmax / cmin)));
    const int l_st = cfg.integer("stab_l", 5);
    const auto v1 = eng.value(Vec2{1.0, 0.0}, l_st, std::exp2(4.05 * l_st));
    const auto v2 = eng.value(Vec2{1.0, 0.0}, l_st, std::exp2(4.5 * l_st));
    const double rel = std::abs(v1.value - v2.value) / std::abs(v2.value);
    r.checks.push_back(mk_check("stabilized", rel <= 0.1, "rel=" + num_str(rel)));
    r.tables.push_back(t);
    Table f{"fit", {"slope", "intercept", "half_width"}, {{fit.slope, fit.intercept, fit.half_width}}};
    r.tables.push_back(f);
    return r;
}

SuiteResult suite_gradient(const Config& cfg) {
    SuiteResult r{"gradient", {}, {}};
    const int l_min = cfg.integer("l_min", 4), l_max = cfg.integer("l_max", 8);
    const double eps = cfg.number("epsilon", 0.1);
    const EngineConfig ec = engine_config(cfg);
    FirstIterationEngine eng(f4_triple(), g0_init(eps), ec);
    Table t{"growth", {"l", "abs_grad", "abs_value", "ratio"}, {}};
    std::vector<std::pair<double, double>> gp, rp;
    for (int l = l_min; l <= l_max; ++l) {
        const double tt = stab_time(ec, l, 4.0, 4.0);
        const auto [gx, gy] = eng.gradient(Vec2{1.0, 0.0}, l, tt);
        const double ag = std::sqrt(std::norm(gx) + std::norm(gy));
        const double av = std::abs(eng.value(Vec2{1.0, 0.0}, l, tt).value);
        t.rows.push_back({double(l), ag, av, ag / av});
        gp.push_back({double(l), std::log2(ag)});
        rp.push_back({double(l), std::log2(ag / av)});
    }
    const auto gfit = fit_slope(gp), rfit = fit_slope(rp);
    r.checks.push_back(mk_check("gradient-slope", std::abs(gfit.slope - 5.0) <= 0.25,
                                "slope=" + num_str(gfit.slope)));
    r.checks.push_back(mk_check("ratio-slope", std::abs(rfit.slope - 3.0) <= 0.2,
                                "slope=" + num_str(rfit.slope)));
    // Finite-difference cross check at the smallest depth.
    const int lf = cfg.integer("fd_l", 4);
    const double tt = stab_time(ec, lf, 4.0, 4.0);
    const double h = cfg.number("fd_step", 0.02);
    const auto [gx, gy] = eng.gradient(Vec2{1.0, 0.0}, lf, tt);
    const complex vp = eng.value(Vec2{1.0 + h, 0.0}, lf, tt).value;
    const complex vm = eng.value(Vec2{1.0 - h, 0.0}, lf, tt).value;
    const complex fd = (vp - vm) / (2.0 * h) * std::exp2(3.0 * lf);
    const double rel = std::abs(fd - gx) / std::abs(gx);
    r.checks.push_back(mk_check("fd-cross-check", rel <= 0.1, "rel=" + num_str(rel)));
    (void)gy;
    r.tables.push_back(t);
    Table f{"fit", {"slope", "intercept", "half_width"},
            {{gfit.slope, gfit.intercept, gfit.half_width},
             {rfit.slope, rfit.intercept, rfit.half_width}}};
    r.tables.push_back(f);
    return r;
}

SuiteResult suite_mid_frequency(const Config& cfg) {
    SuiteResult r{"mid-frequency", {}, {}};
    const double eps = cfg.number("epsilon", 0.1);
    EngineConfig ec = engine_config(cfg);
    // Ratio checks with a 1.5x band tolerate loose inner tolerances.
    ec.quad_rel_tol = cfg.number("mid_quad_rel_tol", 1e-4);
    ec.time_rel_tol = cfg.number("mid_time_rel_tol", 3e-4);
    FirstIterationEngine eng(f4_triple(), g0_init(eps), ec);
    const double t1 = cfg.number("t_short", 64.0), t2 = cfg.number("t_long", 4096.0);
    Table t{"shells", {"k", "sup_short", "sup_long", "ratio"}, {}};
    bool bounded = true, vanish = true;
    std::vector<int> shells;
    for (int k = cfg.integer("k_min", -8); k <= 0; ++k) shells.push_back(k);
    for (int k = 2; k <= cfg.integer("k_max", 3); ++k) shells.push_back(k);
    for (int k : shells) {
        const double s1 = eng.mid_frequency_sup(k, t1);
        const double s2 = eng.mid_frequency_sup(k, t2);
        const double ratio = s1 > 0.0 ? std::max(s1, s2) / std::min(s1, s2) : 1.0;
        t.rows.push_back({double(k), s1, s2, ratio});
        if (k <= 0) bounded = bounded && ratio <= 1.5;
        else vanish = vanish && s1 == 0.0 && s2 == 0.0;
    }
    r.checks.push_back(mk_check("sup-stabilized", bounded, ""));
    r.checks.push_back(mk_check("high-shells-vanish", vanish, ""));
    r.tables.push_back(t);
    return r;
}

SuiteResult suite_time_derivative(const Config& cfg) {
    SuiteResult r{"time-derivative", {}, {}};
    const double eps = cfg.number("epsilon", 0.1);
    const int l = cfg.integer("l", 5);
    const EngineConfig ec = engine_config(cfg);
    FirstIterationEngine eng(f4_triple(), g0_init(eps), ec);
    const Vec2 xg{1.0, 0.0};
    const auto td = eng.tail_data(1.0, l);
    const double freq_pred = td.alpha * std::exp2(-4.0 * l);
    // Quadrature-side samples across a time decade; the law |G| ~ |C|/s'.
    Table t{"decay", {"s_prime", "abs_G", "s_abs_G"}, {}};
    double pmin = std::numeric_limits<double>::infinity(), pmax = 0.0;
    for (double sp : {3.9, 9.0, 18.0, 39.0}) {
        const complex g = eng.inner_integrand(xg, l, sp);
        t.rows.push_back({sp, std::abs(g), sp * std::abs(g)});
        pmin = std::min(pmin, sp * std::abs(g));
        pmax = std::max(pmax, sp * std::abs(g));
    }
    r.checks.push_back(mk_check("inverse-time-law", pmax / pmin <= 3.0,
                                "spread=" + num_str(pmax / pmin)));
    // Oscillation frequency from the phase increment of d/dt f^ in t.
    const double t0 = stab_time(ec, l, 4.0, 1.5);
    const double dt = 0.5 / std::abs(freq_pred);
    const complex d0 = eng.time_derivative(xg, l, t0);
    const complex d1 = eng.time_derivative(xg, l, t0 + dt);
    double dphase = std::arg(d1 / d0) / dt;
    const double rel = std::abs(dphase - freq_pred) / std::abs(freq_pred);
    r.checks.push_back(mk_check("oscillation-frequency", rel <= 0.05,
                                "measured=" + num_str(dphase) +
                                    " predicted=" + num_str(freq_pred)));
    r.tables.push_back(t);
    return r;
}

struct SecondStack {
    FirstIterationEngine e4, e5;
    SecondIterationEngine second;

    SecondStack(int l, double eps, const EngineConfig& ec)
        : e4(f4_triple(), g0_init(eps), ec),
          e5(f5_triple(), g0_init(eps), ec),
          second(&e4, &e5, f4_triple(), l, ec) {}
};

EngineConfig second_config(const Config& cfg) {
    EngineConfig ec = engine_config(cfg);
    // The second stage tolerates looser inner tolerances; the measured
    // exponents have wide acceptance bands.
    ec.quad_rel_tol = cfg.number("second_quad_rel_tol", 2e-5);
    ec.time_rel_tol = cfg.number("second_time_rel_tol", 1e-5);
    return ec;
}

SuiteResult suite_second_iteration(const Config& cfg) {
    SuiteResult r{"second-iteration", {}, {}};
    const double eps = cfg.number("epsilon", 0.1);
    const int l_min = cfg.integer("l_min", 3), l_max = cfg.integer("l_max", 5);
    const EngineConfig ec = second_config(cfg);
    Table t{"growth", {"l", "abs_value", "normalized"}, {}};
    std::vector<std::pair<double, double>> pts;
    for (int l = l_min; l <= l_max; ++l) {
        SecondStack st(l, eps, ec);
        const double tt = stab_time(ec, l, 12.0, 4.0);
        const auto v = st.second.value(Vec2{1.0, 0.0}, tt);
        const double av = std::abs(v.value);
        t.rows.push_back({double(l), av, av / std::exp2(10.0 * l)});
        pts.push_back({double(l), std::log2(av)});
    }
    const auto fit = fit_slope(pts);
    r.checks.push_back(mk_check("growth-slope", std::abs(fit.slope - 10.0) <= 0.5,
                                "slope=" + num_str(fit.slope)));
    r.tables.push_back(t);
    Table f{"fit", {"slope", "intercept", "half_width"}, {{fit.slope, fit.intercept, fit.half_width}}};
    r.tables.push_back(f);
    return r;
}

SuiteResult run_l2(const Config& cfg, const std::string& name, bool with_checks) {
    SuiteResult r{name, {}, {}};
    const double eps = cfg.number("epsilon", 0.1);
    const int l_min = cfg.integer("l_min", 3), l_max = cfg.integer("l_max", 5);
    const EngineConfig ec = second_config(cfg);
    Table t{"l2", {"l", "t", "l2_norm", "normalized"}, {}};
    std::vector<std::pair<double, double>> pts;
    std::vector<double> norms;
    for (int l = l_min; l <= l_max; ++l) {
        SecondStack st(l, eps, ec);
        const double tt = stab_time(ec, l, 12.0, 4.0);
        const double nv = st.second.l2_norm_lowfreq(tt);
        t.rows.push_back({double(l), tt, nv, nv / std::exp2(double(l))});
        pts.push_back({double(l), std::log2(nv)});
        norms.push_back(nv);
    }
    r.tables.push_back(t);
    if (with_checks) {
        const auto fit = fit_slope(pts);
        r.checks.push_back(mk_check("l2-slope", std::abs(fit.slope - 1.0) <= 0.3,
                                    "slope=" + num_str(fit.slope)));
        bool mono = true;
        for (size_t i = 1; i < norms.size(); ++i) mono = mono && norms[i] > norms[i - 1];
        r.checks.push_back(mk_check("norm-strictly-increasing", mono, ""));
        Table f{"fit", {"slope", "intercept", "half_width"},
                {{fit.slope, fit.intercept, fit.half_width}}};
        r.tables.push_back(f);
    }
    return r;
}

SuiteResult suite_exponent_map(const Config& cfg) {
    SuiteResult r{"exponent-map", {}, {}};
    const int n = cfg.integer("orbit_length", 12);
    const auto orbit = exponent_orbit(n);
    Table t{"orbit", {"step", "num", "den", "value"}, {}};
    for (int i = 0; i < n; ++i)
        t.rows.push_back({double(i), double(orbit[i].num), double(orbit[i].den),
                          double(orbit[i].num) / double(orbit[i].den)});
    r.tables.push_back(t);
    r.checks.push_back(mk_check("step-one", orbit.size() > 1 && orbit[1] == Rational(2, 3),
                                orbit.size() > 1 ? orbit[1].str() : ""));
    r.checks.push_back(mk_check("step-two", orbit.size() > 2 && orbit[2] == Rational(10, 9),
                                orbit.size() > 2 ? orbit[2].str() : ""));
    r.checks.push_back(mk_check("fixed-point", exponent_step(Rational(2, 1)) == Rational(2, 1),
                                "map(2)=2"));
    bool increasing = true;
    for (size_t i = 1; i < orbit.size(); ++i) {
        // cross-multiplied exact comparison
        increasing = increasing &&
                     orbit[i].num * orbit[i - 1].den > orbit[i - 1].num * orbit[i].den;
    }
    r.checks.push_back(mk_check("orbit-increasing", increasing, ""));
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"degeneracy-scan", "lemma21-scan",   "critical-point", "first-iteration",
            "gradient",        "mid-frequency",  "time-derivative", "second-iteration",
            "l2-norm",         "blowup-demo",    "exponent-map"};
}

SuiteResult run_suite(const std::string& name, const Config& cfg) {
    if (name == "degeneracy-scan") return suite_degeneracy(cfg);
    if (name == "lemma21-scan") return suite_lemma21(cfg);
    if (name == "critical-point") return suite_critical(cfg);
    if (name == "first-iteration") return suite_first_iteration(cfg);
    if (name == "gradient") return suite_gradient(cfg);
    if (name == "mid-frequency") return suite_mid_frequency(cfg);
    if (name == "time-derivative") return suite_time_derivative(cfg);
    if (name == "second-iteration") return suite_second_iteration(cfg);
    if (name == "l2-norm") return run_l2(cfg, "l2-norm", false);
    if (name == "blowup-demo") return run_l2(cfg, "blowup-demo", true);
    if (name == "exponent-map") return suite_exponent_map(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

void write_csv(const SuiteResult& r, std::ostream& out) {
    out << "# kgcascade-report v1\n";
    out << "# suite," << r.name << "\n";
    out.precision(17);
    for (const auto& t : r.tables) {
        out << "table," << t.name;
        for (const auto& c : t.columns) out << "," << c;
        out << "\n";
        for (const auto& row : t.rows) {
            out << "row," << t.name;
            for (double v : row) out << "," << v;
            out << "\n";
        }
    }
    for (const auto& c : r.checks)
        out << "check," << c.name << "," << (c.pass ? "pass" : "fail") << ","
            << c.detail << "\n";
}

void write_json(const SuiteResult& r, std::ostream& out) {
    out.precision(17);
    out << "{\"format\":\"kgcascade-report\",\"version\":1,\"suite\":\"" << r.name
        << "\",\"pass\":" << (r.pass() ? "true" : "false") << ",\"tables\":[";
    for (size_t i = 0; i < r.tables.size(); ++i) {
        const auto& t = r.tables[i];
        out << (i ? "," : "") << "{\"name\":\"" << t.name << "\",\"columns\":[";
        for (size_t j = 0; j < t.columns.size(); ++j)
            out << (j ? "," : "") << "\"" << t.columns[j] << "\"";
        out << "],\"rows\":[";
        for (size_t j = 0; j < t.rows.size(); ++j) {
            out << (j ? "," : "") << "[";
            for (size_t k = 0; k < t.rows[j].size(); ++k)
                out << (k ? "," : "") << t.rows[j][k];
            out << "]";
        }
        out << "]}";
    }
    out << "],\"checks\":[";
    for (size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        out << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"pass\":"
            << (c.pass ? "true" : "false") << ",\"detail\":\"" << c.detail << "\"}";
    }
    out << "]}\n";
}

void write_svg_plot(const Table& t, int xcol, int ycol, std::ostream& out) {
    if (t.rows.empty()) throw std::invalid_argument("write_svg_plot: empty table");
    const int W = 640, H = 480, M = 48;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& row : t.rows) {
        xmin = std::min(xmin, row[xcol]); xmax = std::max(xmax, row[xcol]);
        ymin = std::min(ymin, row[ycol]); ymax = std::max(ymax, row[ycol]);
    }
    if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
    if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }
    auto px = [&](double x) { return M + (W - 2 * M) * (x - xmin) / (xmax - xmin); };
    auto py = [&](double y) { return H - M - (H - 2 * M) * (y - ymin) / (ymax - ymin); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
        << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << t.name
        << ": " << t.columns[ycol] << " vs " << t.columns[xcol] << "</text>\n";
    out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const auto& row : t.rows) out << px(row[xcol]) << "," << py(row[ycol]) << " ";
    out << "\"/>\n";
    for (const auto& row : t.rows)
        out << "<circle cx=\"" << px(row[xcol]) << "\" cy=\"" << py(row[ycol])
            << "\" r=\"3\"/>\n";
    out << "</svg>\n";
}

}  // namespace kgc
