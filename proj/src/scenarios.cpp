#include "tdwell/scenarios.hpp"

#include <cmath>

#include "tdwell/mapping.hpp"
#include "tdwell/propagators.hpp"

namespace tdwell {

const char* case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::FreeParticle: return "free_particle";
        case CaseLabel::StaticDeltaIsho: return "static_delta_isho";
        case CaseLabel::DecayingDeltaIsho: return "decaying_delta_isho";
        case CaseLabel::PureIsho: return "pure_isho";
    }
    return "?";
}

namespace {

void require_atomic(const PhysicalParams& p) {
    if (p.m != 1.0 || p.hbar != 1.0)
        throw std::invalid_argument("run_fig2: atomic units (m = hbar = 1) enforced");
}

std::vector<double> sample_times(double t_max, int n_samples) {
    if (!(t_max > 0.0) || n_samples < 2)
        throw std::invalid_argument("fig2: t_max > 0 and n_samples >= 2 required");
    std::vector<double> ts(n_samples + 1);
    for (int j = 0; j <= n_samples; ++j) ts[j] = t_max*j/n_samples;
    return ts;
}

SurvivalCurve analytic_curve(CaseLabel label, const KernelFn& kernel,
                             const Fig2Config& cfg) {
    const PhysicalParams& p = cfg.params;
    const double kap = p.m*p.v0/(p.hbar*p.hbar);
    const Grid1D grid(-cfg.x_span, cfg.x_span, cfg.out_n);
    WaveFunction psi0 = WaveFunction::from_function(
        grid, [&](double x) { return Complex{psi_delta(p, x), 0.0}; });
    psi0.normalize();
    auto psi0_fn = [&p](double x) { return Complex{psi_delta(p, x), 0.0}; };
    const double support = 40.0/kap;
    const std::vector<double> breaks{-support, 0.0, support};

    SurvivalCurve curve{label, {}};
    for (double t : sample_times(cfg.t_max, cfg.n_samples)) {
        if (t == 0.0) {
            curve.samples.emplace_back(0.0, 1.0);
            continue;
        }
        const WaveFunction psit = evolve_state(kernel, psi0_fn, breaks, t, grid, cfg.quad);
        curve.samples.emplace_back(t, survival(psi0, psit));
    }
    return curve;
}

}  // namespace

SurvivalCurve fig2_oracle_curve(const Fig2Config& cfg, double sigma) {
    const PhysicalParams& p = cfg.params;
    require_atomic(p);
    const Grid1D grid(-cfg.oracle_span, cfg.oracle_span, cfg.oracle_n);

    PotentialSpec pot;
    pot.m = p.m;
    pot.hbar = p.hbar;
    const double w2 = p.omega*p.omega;
    pot.v = [m = p.m, w2](double x, double) { return -0.5*m*w2*x*x; };
    pot.delta_terms.push_back({[v0 = p.v0](double) { return -v0; }, 0.0, sigma});

    CapSpec cap;
    cap.width_fraction = 0.15;
    cap.power = 3;
    const double inner = cfg.oracle_span*(1.0 - 2.0*cap.width_fraction);
    const double k0 = 0.8*p.m*p.omega*inner/p.hbar;
    PotentialSpec free_pot;
    free_pot.m = p.m;
    free_pot.hbar = p.hbar;
    cap.strength = tune_cap_strength(grid, free_pot, cap, k0);

    WaveFunction psi0 = WaveFunction::from_function(
        grid, [&](double x) { return Complex{psi_delta(p, x), 0.0}; });
    psi0.normalize();

    SurvivalCurve curve{CaseLabel::StaticDeltaIsho, {}};
    cn_evolve_observed(pot, cap, psi0, sample_times(cfg.t_max, cfg.n_samples),
                       cfg.oracle_dt, [&](const WaveFunction& wf) {
                           curve.samples.emplace_back(wf.t, survival(psi0, wf));
                       });
    return curve;
}

std::array<SurvivalCurve, 4> run_fig2(const Fig2Config& cfg) {
    const PhysicalParams& p = cfg.params;
    require_atomic(p);
    p.validate();
    if (!(p.omega > 0.0) || !(p.v0 > 0.0))
        throw std::invalid_argument("run_fig2: omega > 0 and v0 > 0 required");

    SurvivalCurve a = analytic_curve(
        CaseLabel::FreeParticle,
        [&p](double x, double t, double xp) { return k_free(p, x, t, xp); }, cfg);
    SurvivalCurve c = analytic_curve(
        CaseLabel::DecayingDeltaIsho,
        [&p](double x, double t, double xp) { return k_td_full(p, x, t, xp); }, cfg);
    SurvivalCurve d = analytic_curve(
        CaseLabel::PureIsho,
        [&p](double x, double t, double xp) { return k_isho(p, x, t, xp); }, cfg);

    // sigma-extrapolation of the oracle curve: error linear in sigma
    const double sigma = cfg.sigma_frac*p.bound_length();
    SurvivalCurve b1 = fig2_oracle_curve(cfg, sigma);
    SurvivalCurve b2 = fig2_oracle_curve(cfg, 0.5*sigma);
    SurvivalCurve b{CaseLabel::StaticDeltaIsho, {}};
    for (std::size_t j = 0; j < b1.samples.size(); ++j) {
        b.samples.emplace_back(b1.samples[j].first,
                               2.0*b2.samples[j].second - b1.samples[j].second);
    }
    return {a, b, c, d};
}

DecayFit asymptotic_decay_check(const SurvivalCurve& curve, const PhysicalParams& p) {
    if (curve.label != CaseLabel::DecayingDeltaIsho)
        throw std::invalid_argument("asymptotic_decay_check: expects curve (c)");
    if (curve.samples.empty() ||
        p.omega*curve.samples.back().first < 5.0)
        throw std::invalid_argument(
            "asymptotic_decay_check: samples must extend to omega*t >= 5");

    const double p_end = curve.samples.back().second;
    if (!(p_end > 0.0))
        throw std::domain_error("asymptotic_decay_check: non-positive tail");
    const double thresh = 10.0*p_end;
    std::vector<std::pair<double, double>> win;
    for (auto it = curve.samples.rbegin(); it != curve.samples.rend(); ++it) {
        if (it->second > thresh || !(it->second > 0.0)) break;
        win.push_back(*it);
    }
    if (win.size() < 5)
        throw std::invalid_argument("asymptotic_decay_check: too few samples in the last decade");

    double st = 0, sy = 0, stt = 0, sty = 0;
    for (auto& [t, pv] : win) {
        const double y = std::log(pv);
        st += t; sy += y; stt += t*t; sty += t*y;
    }
    const double n = static_cast<double>(win.size());
    const double slope = (n*sty - st*sy)/(n*stt - st*st);

    const double kap = p.m*p.v0/(p.hbar*p.hbar);
    const double support = 40.0/kap;
    QuadratureConfig q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-10;
    const double phase_rate = 0.5*p.m*p.omega/p.hbar;
    auto f1 = [&](double x) {
        return std::exp(Complex{0.0, phase_rate*x*x})*psi_delta(p, x);
    };
    const Complex i1 = integrate_segments(f1, {-support, 0.0, support}, q).value;
    const double t_tilde_inf = 1.0/(2.0*p.omega);
    auto f2 = [&](double xp) {
        return std::exp(Complex{0.0, -phase_rate*xp*xp})*
               k_delta_static(p, 0.0, t_tilde_inf, xp)*psi_delta(p, xp);
    };
    const Complex i2 = integrate_segments(f2, {-support, 0.0, support}, q).value;
    return {slope, std::norm(i1), std::norm(i2)};
}

// ---------------------------------------------------------------------------
// Fig. 1

double optical_potential_cut(const OpticalTrapParams& otp, double x_um) {
    const double g = x_um/otp.w0_um;
    return -otp.v0_nk*std::exp(-2.0*g*g) - otp.f_nk_per_um*x_um;
}

namespace {
// dV/dx in nK/um; roots of slope(x) = F located by bisection
double trap_slope_minus_f(const OpticalTrapParams& otp, double x) {
    const double g = x/otp.w0_um;
    return 4.0*otp.v0_nk*x/(otp.w0_um*otp.w0_um)*std::exp(-2.0*g*g) - otp.f_nk_per_um;
}

double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5*(a + b);
        const double fm = f(m);
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5*(a + b);
}
}  // namespace

WellClassification classify_metastable_well(const OpticalTrapParams& otp) {
    // h(x) = 4 V0 x/w0^2 e^{-2x^2/w0^2} peaks at x = w0/2; a well exists iff
    // the peak exceeds F, i.e. V' has two roots in (0, 3 w0).
    const double xpk = 0.5*otp.w0_um;
    if (trap_slope_minus_f(otp, xpk) <= 0.0) return {false, 0.0, 0.0};
    auto f = [&](double x) { return trap_slope_minus_f(otp, x); };
    const double x_min = bisect(f, 1e-12, xpk);       // slope crosses F upward
    const double x_bar = bisect(f, xpk, 3.0*otp.w0_um);
    return {true, x_min, x_bar};
}

double critical_trap_depth_nk(const OpticalTrapParams& otp) {
    double lo = 1.0, hi = otp.v0_nk;
    OpticalTrapParams probe = otp;
    probe.v0_nk = hi;
    while (!classify_metastable_well(probe).has_well) {
        hi *= 2.0;
        probe.v0_nk = hi;
        if (hi > 1e9) throw std::runtime_error("critical_trap_depth: no well found");
    }
    for (int it = 0; it < 100; ++it) {
        probe.v0_nk = 0.5*(lo + hi);
        if (classify_metastable_well(probe).has_well) hi = probe.v0_nk;
        else lo = probe.v0_nk;
    }
    return 0.5*(lo + hi);
}

double gravity_force_nk_per_um(double mass_u) {
    const double f_si = mass_u*constants::kAtomicMassUnit*constants::kGravity;  // N
    UnitSystem lab{UnitMode::LabNanoKelvinMicron};
    return convert_units(lab, f_si, Dimension::Force, ConvertDirection::FromSi);
}

// ---------------------------------------------------------------------------
// Fig. 3

Fig3Scales fig3_scales(const Fig3Config& cfg) {
    const double m_kg = cfg.mass_u*constants::kAtomicMassUnit;
    const double mu = cfg.mu_per_m;
    const double length = 1.0/mu;
    const double energy = constants::kHbarSi*constants::kHbarSi*mu*mu/m_kg;
    const double time = constants::kHbarSi/energy;
    const double omega_si = 2.0*kPi*cfg.omega_hz;
    return {length, energy, time, omega_si*time};
}

double fig3_potential_dimless(const Fig3Config& cfg, double x, double t) {
    const Fig3Scales sc = fig3_scales(cfg);
    const double w = sc.omega_dimless;
    const CoshParams cp{cfg.alpha, 1.0};
    const PhysicalParams unit{1.0, 1.0, 0.0, 0.0};
    const double c = std::exp(w*t);
    return -0.5*w*w*x*x + v_cosh(unit, cp, x/c)/(c*c);
}

std::vector<Fig3Snapshot> run_fig3(const Fig3Config& cfg) {
    if (!(cfg.alpha > 0.0) || !(cfg.mu_per_m > 0.0) || !(cfg.omega_hz > 0.0))
        throw std::invalid_argument("run_fig3: alpha, mu, omega must be positive");
    const Fig3Scales sc = fig3_scales(cfg);
    const double w = sc.omega_dimless;

    const PhysicalParams p{1.0, 1.0, w, 0.0};
    const CoshParams cp{cfg.alpha, 1.0};
    const ScalingProfile prof = ScalingProfile::exponential(w);
    const PropagatorHandle base = PropagatorHandle::cosh_well(p, cp);
    const KernelFn mapped = [prof, base, p](double x, double t, double xp) {
        return mapped_kernel(prof, base, p, x, t, xp);
    };
    const KernelFn freek = [p](double x, double t, double xp) {
        return k_free(p, x, t, xp);
    };

    const Grid1D grid(-cfg.x_span, cfg.x_span, cfg.out_n);
    const double x0 = 0.5*std::log(1.0/cfg.alpha);  // well position
    auto psi0_fn = [cp](double x) { return Complex{psi_ch(cp, x), 0.0}; };
    const std::vector<double> breaks{x0 - 42.0, x0, x0 + 42.0};

    std::vector<Fig3Snapshot> out;
    for (double wt : cfg.omega_t_snapshots) {
        const double t = wt/w;
        Fig3Snapshot snap;
        snap.omega_t = wt;
        snap.t_ms = t*sc.time_s*1e3;
        if (wt == 0.0) {
            snap.psi = WaveFunction::from_function(grid, psi0_fn, 0.0);
            snap.psi_free = snap.psi;
        } else {
            snap.psi = evolve_state(mapped, psi0_fn, breaks, t, grid, cfg.quad);
            snap.psi_free = evolve_state(freek, psi0_fn, breaks, t, grid, cfg.quad);
        }
        snap.v_nk = Eigen::VectorXd(grid.n);
        const double e_nk = sc.energy_j/(constants::kBoltzmann*1e-9);
        for (int i = 0; i < grid.n; ++i)
            snap.v_nk(i) = fig3_potential_dimless(cfg, grid.x(i), t)*e_nk;
        out.push_back(std::move(snap));
    }
    return out;
}

}  // namespace tdwell
