#pragma once

#include <array>
#include <vector>

#include "tdwell/crank_nicolson.hpp"
#include "tdwell/evolve.hpp"
#include "tdwell/grid.hpp"
#include "tdwell/physical.hpp"
#include "tdwell/quadrature.hpp"
#include "tdwell/units.hpp"

namespace tdwell {

// ---------------------------------------------------------------------------
// Survival-probability curves (Fig. 2)

enum class CaseLabel { FreeParticle, StaticDeltaIsho, DecayingDeltaIsho, PureIsho };
const char* case_label_name(CaseLabel c);

struct SurvivalCurve {
    CaseLabel label;
    std::vector<std::pair<double, double>> samples;  // (t, P), t increasing
};

struct Fig2Config {
    PhysicalParams params{1.0, 1.0, 1.0, 1.0};  // atomic units, omega = V0 = 1
    double t_max = 8.0;
    int n_samples = 200;  // emits n_samples + 1 rows including t = 0

    // analytic curves (a), (c), (d)
    double x_span = 24.0;
    int out_n = 960;
    QuadratureConfig quad{1e-10, 1e-8, 50, 1e-14, 400000};

    // oracle curve (b): static delta + inverted oscillator
    double oracle_span = 40.0;
    int oracle_n = 16384;
    double oracle_dt = 5e-4;
    double sigma_frac = 0.05;  // sigma = sigma_frac * bound length; extrapolated from {sigma, sigma/2}
};

/// Four curves: (a) free, (b) static delta + ISHO (Crank-Nicolson oracle,
/// sigma-extrapolated), (c) decaying delta + ISHO, (d) pure ISHO.
std::array<SurvivalCurve, 4> run_fig2(const Fig2Config& cfg);

/// Curve (b) alone at a fixed regularization width (no extrapolation).
SurvivalCurve fig2_oracle_curve(const Fig2Config& cfg, double sigma);

struct DecayFit {
    double slope;  // least-squares slope of ln P over the last decade of P
    double c1;     // |int e^{+i m w x^2/(2 hbar)} psi(x)|^2
    double c2;     // |int e^{-i m w x'^2/(2 hbar)} K~(0, 1/(2w)|x',0) psi(x')|^2
};

/// Late-time analysis of curve (c): exponential slope plus the two constant
/// factors of the asymptotic law P(t) ~ e^{-w t} c1 c2.
DecayFit asymptotic_decay_check(const SurvivalCurve& curve, const PhysicalParams& p);

// ---------------------------------------------------------------------------
// Optical trap (Fig. 1)

struct OpticalTrapParams {
    double v0_nk = 2400.0;
    double w0_um = 27.0;
    double lambda_um = 10.6;
    double f_nk_per_um = 103.0;
    double alpha_s = 5.3e-39;  // m^2 C/V, Rb-87 polarizability
    double p_laser_w = 0.2;    // W
    double z0_um() const { return kPi*w0_um*w0_um/lambda_um; }
};

/// V(x) = -V0 exp(-2 x^2/w0^2) - F x, in nK for x in um.
double optical_potential_cut(const OpticalTrapParams& otp, double x_um);

struct WellClassification {
    bool has_well;
    double x_minimum_um;  // local minimum (only meaningful when has_well)
    double x_barrier_um;  // barrier maximum
};

/// A metastable well exists iff V'(x) = 0 has two roots in (0, 3 w0).
WellClassification classify_metastable_well(const OpticalTrapParams& otp);

/// Critical V0 between "no well" and "well" (bisection on well existence).
double critical_trap_depth_nk(const OpticalTrapParams& otp);

/// m g for the given mass, expressed in nK/um.
double gravity_force_nk_per_um(double mass_u);

// ---------------------------------------------------------------------------
// Atom-laser release (Fig. 3)

struct Fig3Config {
    double alpha = 1.0/450.0;
    double mu_per_m = 2.0e6;
    double omega_hz = 50.0;  // trap decay rate omega = 2 pi * omega_hz
    double mass_u = 87.0;
    std::vector<double> omega_t_snapshots{0.0, 0.5, 1.0, 1.5};
    double x_span = 110.0;  // dimensionless grid half-width (units of 1/mu)
    int out_n = 3072;
    QuadratureConfig quad{1e-10, 1e-8, 50, 1e-14, 400000};
};

struct Fig3Scales {
    double length_m;   // 1/mu
    double energy_j;   // hbar^2 mu^2 / m
    double time_s;     // m/(hbar mu^2)
    double omega_dimless;
};
Fig3Scales fig3_scales(const Fig3Config& cfg);

struct Fig3Snapshot {
    double omega_t;
    double t_ms;               // lab time
    WaveFunction psi;          // dimensionless internal state (x in 1/mu units)
    WaveFunction psi_free;     // force-free reference of the same initial state
    Eigen::VectorXd v_nk;      // potential cut V_ch(x, t) on the same grid, nK
};

/// Mapped cosh-well evolution of psi_ch, the free reference, and the
/// potential snapshots, per requested omega*t.
std::vector<Fig3Snapshot> run_fig3(const Fig3Config& cfg);

/// Time-dependent potential of the release scenario in dimensionless units:
/// -(w^2 x^2)/2 + V_ch(x/C)/C^2, C = e^{w t}.
double fig3_potential_dimless(const Fig3Config& cfg, double x, double t);

}  // namespace tdwell
