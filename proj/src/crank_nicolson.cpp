#include "tdwell/crank_nicolson.hpp"

#include <cmath>
#include <cstdio>

#include "tdwell/errors.hpp"
#include "tdwell/tridiag.hpp"

namespace tdwell {

double PotentialSpec::operator()(double x, double t) const {
    double val = v ? v(x, t) : 0.0;
    for (const auto& d : delta_terms) {
        const double u = (x - d.center)/d.sigma;
        val += d.strength(t)*std::exp(-0.5*u*u)/(d.sigma*std::sqrt(2.0*kPi));
    }
    return val;
}

void PotentialSpec::validate() const {
    if (!(m > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("PotentialSpec: m, hbar must be positive");
    for (const auto& d : delta_terms) {
        if (!(d.sigma > 0.0))
            throw std::invalid_argument("PotentialSpec: delta sigma must be positive");
        if (!d.strength)
            throw std::invalid_argument("PotentialSpec: delta strength callback missing");
    }
}

void CapSpec::validate() const {
    if (strength == 0.0) return;
    if (!(width_fraction > 0.0) || !(width_fraction < 0.3))
        throw std::invalid_argument("CapSpec: width_fraction must lie in (0, 0.3)");
    if (power < 2) throw std::invalid_argument("CapSpec: power must be >= 2");
    if (strength < 0.0) throw std::invalid_argument("CapSpec: strength must be >= 0");
}

namespace {

Eigen::VectorXd cap_profile(const Grid1D& g, const CapSpec& cap) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(g.n);
    if (cap.strength == 0.0) return w;
    const double width = cap.width_fraction*(g.x_max - g.x_min);
    const double lo = g.x_min + width, hi = g.x_max - width;
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        double d = 0.0;
        if (x < lo) d = (lo - x)/width;
        else if (x > hi) d = (x - hi)/width;
        if (d > 0.0) w(i) = cap.strength*std::pow(d, cap.power);
    }
    return w;
}

struct CnWorkspace {
    Eigen::VectorXcd dl, du, diag, rhs;
    Eigen::VectorXd wcap;
    explicit CnWorkspace(const Grid1D& g, const CapSpec& cap)
        : dl(Eigen::VectorXcd::Zero(g.n - 1)),
          du(Eigen::VectorXcd::Zero(g.n - 1)),
          diag(g.n), rhs(g.n), wcap(cap_profile(g, cap)) {}
};

// One Crank-Nicolson step psi(t) -> psi(t+h) with V sampled at t + h/2.
void cn_step(const PotentialSpec& pot, CnWorkspace& ws, WaveFunction& psi, double h,
             bool check_stability) {
    const Grid1D& g = psi.grid;
    const int n = g.n;
    const double dx = g.dx();
    const double kin = pot.hbar*pot.hbar/(pot.m*dx*dx);  // -hbar^2/2m * (-2/dx^2)
    const Complex lam{0.0, h/(2.0*pot.hbar)};
    const Complex off = lam*(-0.5*kin);
    const double tmid = psi.t + 0.5*h;

    const double norm_before = check_stability ? psi.amps.squaredNorm() : 0.0;

    // rhs = (I - lam H) psi with H tridiagonal (Dirichlet ends)
    for (int i = 0; i < n; ++i) {
        const Complex hdiag = kin + pot(g.x(i), tmid) - Complex{0.0, 1.0}*ws.wcap(i);
        ws.diag(i) = 1.0 + lam*hdiag;
        Complex r = (1.0 - lam*hdiag)*psi.amps(i);
        if (i > 0) r -= off*psi.amps(i - 1);
        if (i + 1 < n) r -= off*psi.amps(i + 1);
        ws.rhs(i) = r;
    }
    ws.dl.setConstant(off);
    ws.du.setConstant(off);
    detail::thomas_solve(ws.dl, ws.diag, ws.du, ws.rhs);
    psi.amps = ws.rhs;
    psi.t += h;

    if (check_stability) {
        const double norm_after = psi.amps.squaredNorm();
        if (norm_after > norm_before*(1.0 + 1e-3)*(1.0 + 1e-3)) {
            throw InstabilityError("cn_evolve: norm grew by more than 1e-3 in one step");
        }
    }
}

void warn_cfl(const PotentialSpec& pot, const Grid1D& g, double dt) {
    const double dx = g.dx();
    if (dt >= 10.0*pot.m*dx*dx/pot.hbar) {
        std::fprintf(stderr,
                     "cn_evolve: warning: dt=%g exceeds 10*m*dx^2/hbar=%g; accuracy degraded\n",
                     dt, 10.0*pot.m*dx*dx/pot.hbar);
    }
}

}  // namespace

WaveFunction cn_evolve(const PotentialSpec& pot, const CapSpec& cap,
                       const WaveFunction& psi0, double t_final, double dt) {
    std::vector<double> samples{t_final};
    WaveFunction result;
    cn_evolve_observed(pot, cap, psi0, samples, dt,
                       [&](const WaveFunction& wf) { result = wf; });
    return result;
}

void cn_evolve_observed(const PotentialSpec& pot, const CapSpec& cap,
                        const WaveFunction& psi0, const std::vector<double>& sample_times,
                        double dt,
                        const std::function<void(const WaveFunction&)>& observer) {
    pot.validate();
    cap.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("cn_evolve: dt must be positive");
    if (sample_times.empty()) throw std::invalid_argument("cn_evolve: no sample times");
    warn_cfl(pot, psi0.grid, dt);

    WaveFunction psi = psi0;
    CnWorkspace ws(psi.grid, cap);
    const bool check = cap.strength == 0.0;
    for (double ts : sample_times) {
        if (ts < psi.t - 1e-12)
            throw std::invalid_argument("cn_evolve: sample times must be increasing");
        const double seg = ts - psi.t;
        if (seg > 1e-12) {
            const long nsteps = std::max<long>(1, std::lround(seg/dt));
            const double h = seg/static_cast<double>(nsteps);
            for (long s = 0; s < nsteps; ++s) cn_step(pot, ws, psi, h, check);
        }
        psi.t = ts;  // squash accumulated roundoff
        observer(psi);
    }
}

std::pair<WaveFunction, double> cn_ground_state(const PotentialSpec& pot,
                                                const WaveFunction& psi_seed,
                                                double tau) {
    pot.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("cn_ground_state: tau must be positive");
    const Grid1D& g = psi_seed.grid;
    const int n = g.n;
    const double dx = g.dx();
    const double kin = pot.hbar*pot.hbar/(pot.m*dx*dx);

    Eigen::VectorXd vpot(n);
    for (int i = 0; i < n; ++i) vpot(i) = pot(g.x(i), 0.0);

    auto apply_h = [&](const Eigen::VectorXcd& a) {
        Eigen::VectorXcd r(n);
        for (int i = 0; i < n; ++i) {
            Complex acc = (kin + vpot(i))*a(i);
            if (i > 0) acc -= 0.5*kin*a(i - 1);
            if (i + 1 < n) acc -= 0.5*kin*a(i + 1);
            r(i) = acc;
        }
        return r;
    };

    WaveFunction psi = psi_seed;
    psi.normalize();
    Eigen::VectorXcd dl(n - 1), du(n - 1), diag(n), rhs(n);
    const double lam = tau/(2.0*pot.hbar);
    double e_prev = 1e300;
    const double tol = 1e-10*kin;
    for (long it = 0; it < 200000; ++it) {
        for (int i = 0; i < n; ++i) {
            const double hdiag = kin + vpot(i);
            diag(i) = 1.0 + lam*hdiag;
            Complex r = (1.0 - lam*hdiag)*psi.amps(i);
            if (i > 0) r += lam*0.5*kin*psi.amps(i - 1);
            if (i + 1 < n) r += lam*0.5*kin*psi.amps(i + 1);
            rhs(i) = r;
        }
        dl.setConstant(-lam*0.5*kin);
        du.setConstant(-lam*0.5*kin);
        detail::thomas_solve(dl, diag, du, rhs);
        psi.amps = rhs;
        psi.normalize();
        const double energy = (psi.amps.dot(apply_h(psi.amps))).real()*dx;
        if (std::abs(energy - e_prev) < tol) {
            const double edge = std::max(std::norm(psi.amps(0)), std::norm(psi.amps(n - 1)))*dx;
            if (edge > 1e-8)
                throw NoBoundStateError("cn_ground_state: relaxed state reaches the grid edge");
            psi.t = 0.0;
            return {psi, energy};
        }
        e_prev = energy;
    }
    throw ConvergenceError("cn_ground_state: energy did not settle");
}

double tune_cap_strength(const Grid1D& grid, const PotentialSpec& pot, CapSpec cap,
                         double k0) {
    const double width = cap.width_fraction*(grid.x_max - grid.x_min);
    const double inner = grid.x_max - width;
    const double sigma = std::max(4.0/k0, 8.0*grid.dx());
    const double x0 = inner - 8.0*sigma;
    Grid1D g = grid;
    WaveFunction probe = WaveFunction::from_function(g, [&](double x) {
        const double u = (x - x0)/sigma;
        return std::exp(Complex{-0.25*u*u, k0*x});
    });
    probe.normalize();
    const double v = pot.hbar*k0/pot.m;
    const double t_hit = (grid.x_max - x0 + 10.0*sigma)/v;
    const double dt = 0.2*pot.m*grid.dx()*grid.dx()/pot.hbar;

    const double e0 = pot.hbar*pot.hbar*k0*k0/(2.0*pot.m);
    double best_s = 0.0, best_refl = 1e300;
    for (int j = -2; j <= 5; ++j) {
        CapSpec c = cap;
        c.strength = e0*std::pow(2.0, j);
        WaveFunction out = cn_evolve(pot, c, probe, t_hit, dt);
        double refl = 0.0;  // norm left of the inner CAP edge = not absorbed cleanly
        for (int i = 0; i < g.n; ++i)
            if (g.x(i) < inner) refl += std::norm(out.amps(i));
        refl *= g.dx();
        if (refl < best_refl) {
            best_refl = refl;
            best_s = c.strength;
        }
    }
    return best_s;
}

}  // namespace tdwell
