#pragma once

// Duhamel profile iteration: the seeded initial profile, the first-iteration
// bilinear profiles at low and mid frequency, the memoized radial profile
// grid with its on-disk format, and the second-iteration profile with its
// low-frequency L2 norm.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgc/dyadic.hpp"
#include "kgc/oscint.hpp"
#include "kgc/phase.hpp"

namespace kgc {

/// Seed data: a radial bump of unit height on the Fourier side, scaled by
/// epsilon on the physical side.
struct InitialProfile {
    CutoffSpec cutoff;
    double epsilon = 1.0;

    double fourier_at(Vec2 xi) const { return eval_phi(cutoff, norm(xi)); }
};

InitialProfile g0_init(double epsilon);

/// Product window g0^(xi - eta) g0^(eta) entering the bilinear Duhamel term.
/// conj flags track which factor enters conjugated; the seed is real and
/// radial, so conjugation does not change the value, only the bookkeeping.
struct WindowSpec {
    CutoffSpec cutoff;
    bool conj_first = false;
    bool conj_second = false;

    double eval(Vec2 xi, Vec2 eta) const {
        return eval_phi(cutoff, norm(xi - eta)) * eval_phi(cutoff, norm(eta));
    }
};

WindowSpec duhamel_window(const InteractionTriple& t);

/// One entry of the cascade: which profiles feed which interaction.
struct CascadeEntry {
    std::string output;
    std::string input_first, input_second;
    InteractionTriple triple;
    bool conj_first = false;
    bool conj_second = false;
};

struct SystemSpec {
    std::vector<CascadeEntry> entries;

    /// Conjugation flags must match the branch mass signs.
    void validate() const;
};

SystemSpec cascade_system();

struct EngineConfig {
    // Switch from quadrature to the asymptotic tail here.  The tail constant
    // is measured, its residual goes into the error estimate, and the
    // stationary-phase form is percent-accurate well below this, so pushing
    // the cut higher buys accuracy only at steep quadrature cost.
    double s_cut = 15.0;
    double quad_rel_tol = 1e-5;
    double time_rel_tol = 1e-5;
    double osc_threshold = 3.5;
    double domain_coef = 10.0;     // radius policy R(s) = clamp(coef * s^{-1/3-0.01}, ...)
    double domain_floor = 4.0;
    double domain_cap = 64.0;
};

struct ProfileValue {
    complex value{0.0, 0.0};
    double error_estimate = 0.0;
};

/// First Duhamel iterate of one bilinear interaction.  Low-frequency queries
/// work in rescaled variables (xi = 2^{-3l} xi', eta = 2^{-l} eta',
/// s = 2^{4l} s'), which makes the cost independent of l.
class FirstIterationEngine {
  public:
    FirstIterationEngine(InteractionTriple triple, InitialProfile seed,
                         EngineConfig cfg = {});

    /// f^(2^{-3l} xi', t); grows like 2^{2l} at stabilized times.
    ProfileValue value(Vec2 xi_prime, double l, double t) const;

    /// grad_xi f^ at the same point; dominated by the i s grad_xi Phi term.
    std::pair<complex, complex> gradient(Vec2 xi_prime, double l, double t) const;

    /// d/dt f^; decays like 1/t with frequency Phi~* 2^{-4l}.
    complex time_derivative(Vec2 xi_prime, double l, double t) const;

    /// sup over sampled radii of |f^| on the shell |xi| ~ 2^k (k may be
    /// negative), unrescaled variables.  Exactly zero once the shell misses
    /// the convolution support (radius 2.4).
    double mid_frequency_sup(int k, double t) const;

    /// f^(xi, t) in unrescaled variables; exactly zero outside the
    /// convolution support |xi| <= 2.4.
    ProfileValue direct(Vec2 xi, double t) const;

    /// Inner time integrand G(s') at low frequency, for the time-derivative
    /// and oscillation-frequency probes.
    complex inner_integrand(Vec2 xi_prime, double l, double s_prime) const;

    /// Stationary-phase data of the rescaled phase at radius |xi'| = a_prime.
    struct TailData {
        complex C;      // so that G(s') ~ C e^{i alpha s'} / s'
        double alpha;   // rescaled phase value at the critical point
        double eta_prime;  // critical radius in eta'
    };
    TailData tail_data(double a_prime, double l) const;

    const InteractionTriple& triple() const { return triple_; }
    const EngineConfig& config() const { return cfg_; }
    double epsilon() const { return seed_.epsilon; }

  private:
    InteractionTriple triple_;
    InitialProfile seed_;
    WindowSpec window_;
    EngineConfig cfg_;
};

/// Radial memo of a first-iteration profile at second-iteration times:
/// per node u (rescaled radius), the stabilized time integral at s_cut plus
/// the stationary-phase constants that reconstruct any later time.
class ProfileGrid {
  public:
    struct Node {
        double u = 0.0;       // radius in units of 2^{-3l}
        double l_eff = 0.0;   // adapted depth: l for u <= 1, l - log2(u)/3 above,
                              // so the rescaled critical point stays O(1)
        complex v_cut;        // time integral up to s_cut, adapted units
        complex tail_c;       // G(s') ~ tail_c e^{i alpha s'} / s'
        double alpha = 0.0;
    };

    ProfileGrid(std::string profile_id, const FirstIterationEngine* engine, int l,
                double u_min, double u_max, int nodes_per_octave = 6);

    /// Profile value at radius u (units of 2^{-3l}) and time s (unrescaled).
    /// Falls back to direct evaluation when s is before stabilization.
    complex at(double u, double s) const;

    /// All node values at a fixed time, for bulk interpolation at that time.
    std::vector<complex> snapshot(double s) const;
    complex at_snapshot(const std::vector<complex>& snap, double u) const;

    int l() const { return l_; }
    const std::string& id() const { return id_; }

    /// Columnar text round trip.
    void export_file(const std::string& path) const;
    static ProfileGrid import_file(const std::string& path,
                                   const FirstIterationEngine* engine);

    const std::vector<Node>& nodes() const { return nodes_; }

  private:
    ProfileGrid() = default;
    void ensure(int j) const;
    complex reconstruct(int j, double s_prime) const;

    std::string id_;
    const FirstIterationEngine* engine_ = nullptr;
    int l_ = 0;
    std::vector<double> us_;
    mutable std::vector<std::optional<Node>> memo_;
    mutable std::vector<Node> nodes_;
};

/// Second Duhamel iterate f6 <- (f4, f5), in doubly rescaled variables
/// xi = 2^{-9l} xi'', eta = 2^{-3l} eta'', s = 2^{12l} s''.
class SecondIterationEngine {
  public:
    SecondIterationEngine(const FirstIterationEngine* first, const FirstIterationEngine* second,
                          InteractionTriple triple, int l, EngineConfig cfg = {});

    /// f6^(2^{-9l} xi'', t); grows like 2^{10l} at stabilized times.
    ProfileValue value(Vec2 xi_dprime, double t) const;

    /// L2 norm of f6^ over the low-frequency ball |xi| <= ball_radius 2^{-9l};
    /// grows like 2^l.
    double l2_norm_lowfreq(double t, double ball_radius = 1.0) const;

    int l() const { return l_; }
    ProfileGrid& grid_first() { return grid4_; }
    ProfileGrid& grid_second() { return grid5_; }

  private:
    complex inner_integrand(Vec2 xi_dprime, double s_dprime) const;

    const FirstIterationEngine* first_;
    const FirstIterationEngine* second_;
    InteractionTriple triple_;
    int l_;
    EngineConfig cfg_;
    ProfileGrid grid4_, grid5_;
};

/// Checks that a profile evaluator vanishes outside the stated support
/// radius, sampling a ring of points just past it.
bool support_check(const FirstIterationEngine& engine, double radius, double t);

}  // namespace kgc
