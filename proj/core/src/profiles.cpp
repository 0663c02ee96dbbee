#include "kgc/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kgc/cisi.hpp"
#include "kgc/critical.hpp"

namespace kgc {
namespace {

constexpr double kConvSupport = 2.4;  // 2 * support_radius of the seed

// Integration radius at oscillation parameter s.  `support` is the radius
// of the amplitude support in the integration variable; for small s the
// integrand is not yet oscillating and the domain must cover all of it,
// while for larger s everything away from the O(1) critical point cancels
// and the domain shrinks toward the floor.
double domain_radius(const EngineConfig& cfg, double s, double support) {
    const double cap = std::max(cfg.domain_cap, 1.05 * support);
    if (s <= 0.0) return cap;
    return std::clamp(cfg.domain_coef * std::pow(s, -1.0 / 3.0 - 0.01), cfg.domain_floor,
                      cap);
}

complex iexp(double ph) { return complex{std::cos(ph), std::sin(ph)}; }

// Ci(x) + i Si(x), the antiderivative pair of e^{iu}/u.
complex cisi_pair(double x) { return complex{ci(x), si(x)}; }

}  // namespace

InitialProfile g0_init(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("g0_init: epsilon must be positive");
    return InitialProfile{CutoffSpec{}, epsilon};
}

WindowSpec duhamel_window(const InteractionTriple& t) {
    return WindowSpec{CutoffSpec{}, t.mu.b < 0.0, t.nu.b < 0.0};
}

void SystemSpec::validate() const {
    for (const auto& e : entries) {
        if ((e.triple.mu.b < 0.0) != e.conj_first ||
            (e.triple.nu.b < 0.0) != e.conj_second)
            throw std::logic_error("cascade entry " + e.output +
                                   ": conjugation flags disagree with mass signs");
    }
}

SystemSpec cascade_system() {
    SystemSpec s;
    s.entries.push_back({"f4", "g0", "g0", f4_triple(), false, true});
    s.entries.push_back({"f5", "g0", "g0", f5_triple(), false, true});
    s.entries.push_back({"f6", "f4", "f5", f4_triple(), false, true});
    s.validate();
    return s;
}

FirstIterationEngine::FirstIterationEngine(InteractionTriple triple, InitialProfile seed,
                                           EngineConfig cfg)
    : triple_(triple), seed_(seed), window_(duhamel_window(triple)), cfg_(cfg) {}

complex FirstIterationEngine::inner_integrand(Vec2 xi_prime, double l, double s_prime) const {
    const double xs = std::exp2(-3.0 * l), es = std::exp2(-double(l));
    const double amp = std::exp2(4.0 * l);
    const Vec2 xi = xs * xi_prime;
    OscIntegrand f;
    f.amplitude = [&](Vec2 ep) -> complex { return window_.eval(xi, es * ep); };
    f.phase = [&](Vec2 ep) { return amp * phi(triple_, xi, es * ep); };
    f.phase_grad = [&](Vec2 ep) {
        return (amp * es) * grad_eta_phi(triple_, xi, es * ep);
    };
    QuadratureConfig qc;
    qc.rel_tol = cfg_.quad_rel_tol;
    qc.osc_threshold = cfg_.osc_threshold;
    const double jac = es * es;  // d eta = 2^{-2l} d eta'
    const double support = window_.cutoff.support_radius / es;
    return jac *
           integrate_annulus(f, s_prime, 0.0, domain_radius(cfg_, s_prime, support), qc)
               .value;
}

FirstIterationEngine::TailData FirstIterationEngine::tail_data(double a_prime,
                                                               double l) const {
    if (!(a_prime > 0.0))
        throw std::invalid_argument("tail_data: need a nonzero frequency radius");
    const double a = std::exp2(-3.0 * l) * a_prime;
    const CriticalPoint cp = solve_critical_point(triple_, a);
    const Vec2 xi{a, 0.0}, eta{cp.b, 0.0};
    const double amp = std::exp2(4.0 * l), es = std::exp2(-double(l));
    TailData td;
    td.alpha = amp * cp.phi_value;
    td.eta_prime = cp.b / es;
    // Hessian in eta' of the rescaled phase: 2^{2l} Hess_eta.
    const Mat2 h = std::exp2(2.0 * l) * hess_eta_phi(triple_, xi, eta);
    const auto [pos, neg] = h.signature();
    const double astar = window_.eval(xi, eta);
    // Jacobian 2^{-2l} from d eta = 2^{-2l} d eta' cancels the 2^{2l} pair
    // of Hessian eigenvalue factors; keeping both explicit stays readable.
    td.C = (2.0 * M_PI / std::sqrt(std::abs(h.det()))) * astar *
           iexp(M_PI * (pos - neg) / 4.0) * std::exp2(-2.0 * l);
    return td;
}

ProfileValue FirstIterationEngine::value(Vec2 xi_prime, double l, double t) const {
    const double T = t * std::exp2(-4.0 * l);
    const double e2 = seed_.epsilon * seed_.epsilon;
    // ds = 2^{4l} ds'; the eta Jacobian already lives inside the inner
    // integrand, so the surviving prefactor is the full time rescaling.
    const double growth = std::exp2(4.0 * l);
    auto G = [&](double s) { return inner_integrand(xi_prime, l, s); };
    ProfileValue out;
    const double head = std::min(T, cfg_.s_cut);
    complex v = integrate_time(G, 0.0, head, cfg_.time_rel_tol);
    if (T > cfg_.s_cut) {
        const TailData td = tail_data(norm(xi_prime), l);
        v += oscillatory_tail(td.C, td.alpha, 0, cfg_.s_cut, T);
        const complex sp = td.C * iexp(td.alpha * cfg_.s_cut) / cfg_.s_cut;
        const double K = std::abs(G(cfg_.s_cut) - sp) * cfg_.s_cut * cfg_.s_cut;
        out.error_estimate = e2 * growth * K * (1.0 / cfg_.s_cut - 1.0 / T);
    }
    out.value = e2 * growth * v;
    return out;
}

std::pair<complex, complex> FirstIterationEngine::gradient(Vec2 xi_prime, double l,
                                                           double t) const {
    const double xs = std::exp2(-3.0 * l), es = std::exp2(-double(l));
    const double amp = std::exp2(4.0 * l);
    const Vec2 xi = xs * xi_prime;
    const double e2 = seed_.epsilon * seed_.epsilon;
    const double growth = std::exp2(4.0 * l);  // ds = 2^{4l} ds'
    const double T = t * std::exp2(-4.0 * l);
    const double fd = 1e-6;
    auto window_grad = [&](Vec2 x, Vec2 eta) {
        const double g2 = eval_phi(window_.cutoff, norm(eta));
        auto f1 = [&](Vec2 p) { return eval_phi(window_.cutoff, norm(p - eta)); };
        return Vec2{(f1(x + Vec2{fd, 0.0}) - f1(x - Vec2{fd, 0.0})) / (2.0 * fd) * g2,
                    (f1(x + Vec2{0.0, fd}) - f1(x - Vec2{0.0, fd})) / (2.0 * fd) * g2};
    };
    QuadratureConfig qc;
    qc.rel_tol = cfg_.quad_rel_tol;
    qc.osc_threshold = cfg_.osc_threshold;
    const double jac = es * es;

    // G_k(s') with amplitude [i s' 2^{4l} d_k Phi + d_k W], k = x, y.
    auto Gcomp = [&](int k, double s) -> complex {
        OscIntegrand f;
        f.amplitude = [&, k, s](Vec2 ep) -> complex {
            const Vec2 eta = es * ep;
            const Vec2 gp = grad_xi_phi(triple_, xi, eta);
            const Vec2 gw = window_grad(xi, eta);
            const double dphi = k == 0 ? gp.x : gp.y;
            const double dw = k == 0 ? gw.x : gw.y;
            return complex{0.0, s * amp * dphi} * window_.eval(xi, eta) + dw;
        };
        f.phase = [&](Vec2 ep) { return amp * phi(triple_, xi, es * ep); };
        f.phase_grad = [&](Vec2 ep) {
            return (amp * es) * grad_eta_phi(triple_, xi, es * ep);
        };
        const double support = window_.cutoff.support_radius / es;
        return jac *
               integrate_annulus(f, s, 0.0, domain_radius(cfg_, s, support), qc).value;
    };

    complex comp[2];
    const double head = std::min(T, cfg_.s_cut);
    for (int k = 0; k < 2; ++k) {
        auto G = [&](double s) { return Gcomp(k, s); };
        comp[k] = integrate_time(G, 0.0, head, cfg_.time_rel_tol);
    }
    if (T > cfg_.s_cut) {
        const TailData td = tail_data(norm(xi_prime), l);
        const double a = xs * norm(xi_prime);
        const double co = norm(xi_prime) > 0.0 ? xi_prime.x / norm(xi_prime) : 1.0;
        const double si_ = norm(xi_prime) > 0.0 ? xi_prime.y / norm(xi_prime) : 0.0;
        // Critical data along the axis, rotated back to the query direction.
        const CriticalPoint cp = solve_critical_point(triple_, a);
        const Vec2 xia{a, 0.0}, eta{cp.b, 0.0};
        const Vec2 gp = grad_xi_phi(triple_, xia, eta);
        const Vec2 gw = window_grad(xia, eta);
        const double wstar = window_.eval(xia, eta);
        const complex base = td.C / wstar;  // SP prefactor without the amplitude
        const Vec2 rot_gp{co * gp.x - si_ * gp.y, si_ * gp.x + co * gp.y};
        const Vec2 rot_gw{co * gw.x - si_ * gw.y, si_ * gw.x + co * gw.y};
        for (int k = 0; k < 2; ++k) {
            const double dphi = k == 0 ? rot_gp.x : rot_gp.y;
            const double dw = k == 0 ? rot_gw.x : rot_gw.y;
            comp[k] += oscillatory_tail(base * complex{0.0, amp * dphi} * wstar, td.alpha,
                                        1, cfg_.s_cut, T);
            comp[k] += oscillatory_tail(base * dw, td.alpha, 0, cfg_.s_cut, T);
        }
    }
    return {e2 * growth * comp[0], e2 * growth * comp[1]};
}

complex FirstIterationEngine::time_derivative(Vec2 xi_prime, double l, double t) const {
    const double s = t * std::exp2(-4.0 * l);
    const double e2 = seed_.epsilon * seed_.epsilon;
    complex g;
    if (s > cfg_.s_cut) {
        const TailData td = tail_data(norm(xi_prime), l);
        g = td.C * iexp(td.alpha * s) / s;
    } else {
        g = inner_integrand(xi_prime, l, s);
    }
    return e2 * g;  // d/dt = 2^{-4l} d/ds', cancelling the 2^{4l} time measure
}

ProfileValue FirstIterationEngine::direct(Vec2 xi, double t) const {
    ProfileValue out;
    if (norm(xi) > kConvSupport) return out;  // window vanishes identically
    const double e2 = seed_.epsilon * seed_.epsilon;
    OscIntegrand f;
    f.amplitude = [&](Vec2 eta) -> complex { return window_.eval(xi, eta); };
    f.phase = [&](Vec2 eta) { return phi(triple_, xi, eta); };
    f.phase_grad = [&](Vec2 eta) { return grad_eta_phi(triple_, xi, eta); };
    QuadratureConfig qc;
    qc.rel_tol = cfg_.quad_rel_tol;
    qc.osc_threshold = cfg_.osc_threshold;
    auto G = [&](double s) {
        return integrate_annulus(f, s, 0.0, window_.cutoff.support_radius, qc).value;
    };
    // No stationary point survives inside the window support at these radii,
    // so G decays superalgebraically; a fixed horizon covers any t.
    const double cap = 6.0 * cfg_.s_cut;
    const double head = std::min(t, cap);
    out.value = e2 * integrate_time(G, 0.0, head, cfg_.time_rel_tol);
    if (t > cap) {
        const double gc = std::abs(G(cap));
        out.error_estimate = e2 * gc * cap * (1.0 / cap - 1.0 / t) * cap;
    }
    return out;
}

double FirstIterationEngine::mid_frequency_sup(int k, double t) const {
    double sup = 0.0;
    for (double frac : {0.7, 0.8, 0.9, 1.0, 1.1}) {
        const double r = frac * std::exp2(double(k));
        sup = std::max(sup, std::abs(direct(Vec2{r, 0.0}, t).value));
    }
    return sup;
}

bool support_check(const FirstIterationEngine& engine, double radius, double t) {
    for (int j = 0; j < 8; ++j) {
        const Vec2 xi = polar(radius * 1.01, 2.0 * M_PI * j / 8.0);
        if (std::abs(engine.direct(xi, t).value) != 0.0) return false;
    }
    return true;
}

ProfileGrid::ProfileGrid(std::string profile_id, const FirstIterationEngine* engine,
                         int l, double u_min, double u_max, int nodes_per_octave)
    : id_(std::move(profile_id)), engine_(engine), l_(l) {
    if (!(u_max > u_min) || !(u_min > 0.0))
        throw std::invalid_argument("ProfileGrid: bad radius range");
    const double octaves = std::log2(u_max / u_min);
    const int n = std::max(4, int(std::ceil(octaves * nodes_per_octave)) + 1);
    for (int j = 0; j < n; ++j)
        us_.push_back(u_min * std::exp2(octaves * j / (n - 1)));
    memo_.assign(us_.size(), std::nullopt);
}

void ProfileGrid::ensure(int j) const {
    if (memo_[j]) return;
    Node nd;
    nd.u = us_[j];
    // Radii past 1 use a shallower depth so the rescaled critical radius
    // (4 |xi'|)^{1/3} stays inside the fixed quadrature domain.
    nd.l_eff = nd.u <= 1.0 ? double(l_) : l_ - std::log2(nd.u) / 3.0;
    const double xi_eff = nd.u <= 1.0 ? nd.u : 1.0;
    const auto td = engine_->tail_data(xi_eff, nd.l_eff);
    nd.tail_c = td.C;
    nd.alpha = td.alpha;
    auto G = [&](double s) {
        return engine_->inner_integrand(Vec2{xi_eff, 0.0}, nd.l_eff, s);
    };
    nd.v_cut = integrate_time(G, 0.0, engine_->config().s_cut,
                              engine_->config().time_rel_tol);
    memo_[j] = nd;
}

// Full profile value at node j and unrescaled time s.
complex ProfileGrid::reconstruct(int j, double s) const {
    ensure(j);
    const Node& nd = *memo_[j];
    const double sc = engine_->config().s_cut;
    const double s_prime = s * std::exp2(-4.0 * nd.l_eff);
    const double scale = engine_->epsilon() * engine_->epsilon() *
                         std::exp2(4.0 * nd.l_eff);
    const double xi_eff = nd.u <= 1.0 ? nd.u : 1.0;
    if (s_prime <= sc) {
        auto G = [&](double ss) {
            return engine_->inner_integrand(Vec2{xi_eff, 0.0}, nd.l_eff, ss);
        };
        return scale *
               integrate_time(G, 0.0, s_prime, engine_->config().time_rel_tol);
    }
    const double aa = std::abs(nd.alpha);
    complex delta;
    if (aa == 0.0) {
        delta = std::log(s_prime / sc);
    } else {
        const complex p1 = cisi_pair(aa * s_prime), p0 = cisi_pair(aa * sc);
        delta = nd.alpha > 0.0 ? p1 - p0 : std::conj(p1 - p0);
    }
    return scale * (nd.v_cut + nd.tail_c * delta);
}

complex ProfileGrid::at(double u, double s) const {
    if (u <= 0.0) u = us_.front();
    const double uc = std::clamp(u, us_.front(), us_.back());
    // 4-point Lagrange in log u through the node profile values.
    const double x = std::log(uc);
    auto it = std::upper_bound(us_.begin(), us_.end(), uc);
    int i1 = int(it - us_.begin()) - 1;
    int i0 = std::clamp(i1 - 1, 0, int(us_.size()) - 4);
    complex acc{0.0, 0.0};
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        const double xa = std::log(us_[i0 + a]);
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            const double xb = std::log(us_[i0 + b]);
            w *= (x - xb) / (xa - xb);
        }
        acc += w * reconstruct(i0 + a, s);
    }
    return acc;
}

std::vector<complex> ProfileGrid::snapshot(double s) const {
    std::vector<complex> snap(us_.size());
    for (size_t j = 0; j < us_.size(); ++j) snap[j] = reconstruct(int(j), s);
    return snap;
}

complex ProfileGrid::at_snapshot(const std::vector<complex>& snap, double u) const {
    if (u <= 0.0) u = us_.front();
    const double uc = std::clamp(u, us_.front(), us_.back());
    const double x = std::log(uc);
    auto it = std::upper_bound(us_.begin(), us_.end(), uc);
    int i1 = int(it - us_.begin()) - 1;
    int i0 = std::clamp(i1 - 1, 0, int(us_.size()) - 4);
    complex acc{0.0, 0.0};
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        const double xa = std::log(us_[i0 + a]);
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            const double xb = std::log(us_[i0 + b]);
            w *= (x - xb) / (xa - xb);
        }
        acc += w * snap[i0 + a];
    }
    return acc;
}

void ProfileGrid::export_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("ProfileGrid: cannot write " + path);
    out.precision(17);
    out << "kgc-profile-grid v1\n";
    out << "id " << id_ << "\n";
    out << "l " << l_ << "\n";
    out << "nodes " << us_.size() << "\n";
    for (size_t j = 0; j < us_.size(); ++j) {
        ensure(int(j));
        const Node& nd = *memo_[j];
        out << j << " " << nd.u << " " << nd.l_eff << " " << nd.v_cut.real() << " "
            << nd.v_cut.imag() << " " << nd.tail_c.real() << " " << nd.tail_c.imag()
            << " " << nd.alpha << "\n";
    }
}

ProfileGrid ProfileGrid::import_file(const std::string& path,
                                     const FirstIterationEngine* engine) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ProfileGrid: cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != "kgc-profile-grid v1")
        throw std::runtime_error("ProfileGrid: unrecognized header in " + path);
    ProfileGrid g;
    g.engine_ = engine;
    size_t n = 0;
    std::string key;
    for (int i = 0; i < 3; ++i) {
        std::getline(in, line);
        std::istringstream ls(line);
        ls >> key;
        if (key == "id") ls >> g.id_;
        else if (key == "l") ls >> g.l_;
        else if (key == "nodes") ls >> n;
        else throw std::runtime_error("ProfileGrid: bad header line: " + line);
    }
    for (size_t j = 0; j < n; ++j) {
        std::getline(in, line);
        std::istringstream ls(line);
        size_t idx;
        Node nd;
        double vr, vi, cr, ci_;
        ls >> idx >> nd.u >> nd.l_eff >> vr >> vi >> cr >> ci_ >> nd.alpha;
        if (!ls || idx != j)
            throw std::runtime_error("ProfileGrid: bad node row in " + path);
        nd.v_cut = complex{vr, vi};
        nd.tail_c = complex{cr, ci_};
        g.us_.push_back(nd.u);
        g.memo_.push_back(nd);
    }
    return g;
}

SecondIterationEngine::SecondIterationEngine(const FirstIterationEngine* first,
                                             const FirstIterationEngine* second,
                                             InteractionTriple triple, int l,
                                             EngineConfig cfg)
    : first_(first),
      second_(second),
      triple_(triple),
      l_(l),
      cfg_(cfg),
      grid4_("f4", first, l, 0.05, 1.3 * cfg.domain_cap),
      grid5_("f5", second, l, 0.05, 1.3 * cfg.domain_cap) {}

complex SecondIterationEngine::inner_integrand(Vec2 xi_dprime, double s_dprime) const {
    const double xs = std::exp2(-9.0 * l_), es = std::exp2(-3.0 * l_);
    const double amp = std::exp2(12.0 * l_);
    const Vec2 xi = xs * xi_dprime;
    const Vec2 xi_d6 = std::exp2(-6.0 * l_) * xi_dprime;  // xi in eta'' units
    const double s = amp * s_dprime;
    const auto snap4 = grid4_.snapshot(s);
    const auto snap5 = grid5_.snapshot(s);
    OscIntegrand f;
    f.amplitude = [&](Vec2 ep) -> complex {
        const double u4 = norm(xi_d6 - ep);
        const double u5 = norm(ep);
        return grid4_.at_snapshot(snap4, u4) * grid5_.at_snapshot(snap5, u5);
    };
    f.phase = [&](Vec2 ep) { return amp * phi(triple_, xi, es * ep); };
    f.phase_grad = [&](Vec2 ep) {
        return (amp * es) * grad_eta_phi(triple_, xi, es * ep);
    };
    QuadratureConfig qc;
    qc.rel_tol = cfg_.quad_rel_tol;
    // Purely relative tolerance: every control quantity then scales exactly
    // with the amplitude, so doubling epsilon rescales the result by exactly
    // 2^4 (power-of-two scaling commutes with rounding).
    qc.abs_tol = 0.0;
    qc.osc_threshold = cfg_.osc_threshold;
    const double jac = es * es;
    // The inner profiles are tabulated out to 1.3 * domain_cap, which bounds
    // the domain here; below s_lo the engine never evaluates, and past it
    // the region outside the cap is oscillation-suppressed.
    return jac *
           integrate_annulus(f, s_dprime, 0.0, domain_radius(cfg_, s_dprime, 0.0), qc)
               .value;
}

ProfileValue SecondIterationEngine::value(Vec2 xi_dprime, double t) const {
    const double T = t * std::exp2(-12.0 * l_);
    const double growth = std::exp2(12.0 * l_);  // ds = 2^{12l} ds''
    // Below s_lo the inner profiles are not yet stabilized; the skipped
    // interval is exponentially short and its contribution is bounded by
    // |J(s_lo)| s_lo, folded into the error estimate.
    const double s_lo = cfg_.s_cut * std::exp2(-8.0 * l_);
    auto J = [&](double s) { return inner_integrand(xi_dprime, s); };
    ProfileValue out;
    const double head = std::min(T, cfg_.s_cut);
    if (!(head > s_lo)) return out;
    // Anchor the time tolerance to the integrand magnitude at the lower end
    // (near its maximum); like the spatial tolerance above, this keeps every
    // adaptive decision invariant under amplitude rescaling.
    const complex j_lo = J(s_lo);
    complex v = integrate_time(J, s_lo, head, cfg_.time_rel_tol * std::abs(j_lo));
    out.error_estimate = std::abs(j_lo) * s_lo;
    if (T > cfg_.s_cut) {
        // Stationary-phase tail with the (stabilized) inner profiles frozen
        // at the cut time.
        const double a = std::exp2(-9.0 * l_) * norm(xi_dprime);
        const CriticalPoint cp = solve_critical_point(triple_, a);
        const Vec2 xia{a, 0.0}, eta{cp.b, 0.0};
        const double alpha2 = std::exp2(12.0 * l_) * cp.phi_value;
        const Mat2 h = std::exp2(6.0 * l_) * hess_eta_phi(triple_, xia, eta);
        const auto [pos, neg] = h.signature();
        const double s_at = std::exp2(12.0 * l_) * cfg_.s_cut;
        const double ep_star = cp.b * std::exp2(3.0 * l_);
        const double u4 = std::abs(ep_star - std::exp2(-6.0 * l_) * norm(xi_dprime));
        const complex astar = grid4_.at(u4, s_at) * grid5_.at(ep_star, s_at);
        const complex C2 = (2.0 * M_PI / std::sqrt(std::abs(h.det()))) * astar *
                           iexp(M_PI * (pos - neg) / 4.0) * std::exp2(-6.0 * l_);
        v += oscillatory_tail(C2, alpha2, 0, cfg_.s_cut, T);
        const complex sp = C2 * iexp(alpha2 * cfg_.s_cut) / cfg_.s_cut;
        const double K = std::abs(J(cfg_.s_cut) - sp) * cfg_.s_cut * cfg_.s_cut;
        out.error_estimate += K * (1.0 / cfg_.s_cut - 1.0 / T);
    }
    out.value = growth * v;
    out.error_estimate *= growth;
    return out;
}

double SecondIterationEngine::l2_norm_lowfreq(double t, double ball_radius) const {
    // 2D radial integral of |f6^|^2 in xi'' units, then the 2^{-9l} measure
    // factor from dxi.
    const int n = 8;
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double r = ball_radius * j / n;
        const double w = (j == n) ? 0.5 : 1.0;  // trapezoid; integrand 0 at r = 0
        const double v = std::abs(value(Vec2{r, 0.0}, t).value);
        acc += w * v * v * r;
    }
    acc *= 2.0 * M_PI * ball_radius / n;
    return std::exp2(-9.0 * l_) * std::sqrt(acc);
}

}  // namespace kgc
