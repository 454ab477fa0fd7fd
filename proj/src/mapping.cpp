#include "tdwell/mapping.hpp"

#include <cmath>

#include "tdwell/quadrature.hpp"

namespace tdwell {

namespace {
const std::function<double(double)> kZero = [](double) { return 0.0; };
}

ScalingProfile ScalingProfile::exponential(double omega, double m) {
    if (!(omega > 0.0)) throw std::invalid_argument("ScalingProfile: omega must be positive");
    ScalingProfile prof;
    prof.C = [omega](double t) { return std::exp(omega*t); };
    prof.Cdot = [omega](double t) { return omega*std::exp(omega*t); };
    prof.Cddot = [omega](double t) { return omega*omega*std::exp(omega*t); };
    prof.A = prof.Adot = prof.Addot = kZero;
    prof.g0 = prof.g1 = kZero;
    prof.g2 = [omega, m](double) { return -0.5*m*omega*omega; };
    prof.k_const = 0.0;
    prof.is_exponential = true;
    prof.omega = omega;
    return prof;
}

ScalingProfile ScalingProfile::identity() {
    ScalingProfile prof;
    prof.C = [](double) { return 1.0; };
    prof.Cdot = prof.Cddot = kZero;
    prof.A = prof.Adot = prof.Addot = kZero;
    prof.g0 = prof.g1 = prof.g2 = kZero;
    prof.k_const = 0.0;
    return prof;
}

double ScalingProfile::t_tilde(double t) const {
    if (t < 0.0) throw std::domain_error("t_tilde: requires t >= 0");
    if (t == 0.0) return 0.0;
    if (is_exponential) return -std::expm1(-2.0*omega*t)/(2.0*omega);
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-13;
    auto f = [this](double s) {
        const double c = C(s);
        return Complex{1.0/(c*c), 0.0};
    };
    return integrate_line(f, 0.0, t, cfg).value.real();
}

bool ScalingProfile::kernel_instantiable(double t) const {
    for (double s : {0.0, 0.5*t, t}) {
        if (std::abs(A(s)) > 0.0 || std::abs(g1(s)) > 0.0) return false;
        if (!(C(s) > 0.0)) return false;
    }
    return true;
}

std::vector<double> ode_residuals(const ScalingProfile& prof, const PhysicalParams& p,
                                  const std::vector<double>& t_samples) {
    if (t_samples.empty()) throw std::invalid_argument("ode_residuals: empty sample list");
    std::vector<double> out;
    out.reserve(t_samples.size());
    for (double t : t_samples) {
        const double c = prof.C(t);
        const double r1 = prof.Cddot(t) + 2.0*prof.g2(t)*c/p.m - prof.k_const/(c*c*c);
        const double r2 = prof.Addot(t) + 2.0*prof.Adot(t)*prof.Cdot(t)/c +
                          prof.k_const*prof.A(t)/(c*c*c*c) - prof.g1(t)/(p.m*c);
        out.push_back(std::max(std::abs(r1), std::abs(r2)));
    }
    return out;
}

MappedCoords transform_coords(const ScalingProfile& prof, double x, double xp, double t) {
    const double ct = prof.C(t), c0 = prof.C(0.0);
    if (!(ct > 0.0) || !(c0 > 0.0))
        throw std::domain_error("transform_coords: C(t) must stay positive");
    return {x/ct, xp/c0, prof.t_tilde(t), Complex{1.0/std::sqrt(ct*c0), 0.0}};
}

Complex mapped_kernel(const ScalingProfile& prof, const PropagatorHandle& base,
                      const PhysicalParams& p, double x, double t, double xp) {
    switch (base.family) {
        case Family::Free:
        case Family::StaticDeltaFree:
        case Family::CoshWell:
            break;
        default:
            throw std::invalid_argument("mapped_kernel: base must be a static-potential kernel");
    }
    if (!prof.kernel_instantiable(t))
        throw std::invalid_argument("mapped_kernel: profile has A != 0 or g1 != 0");
    if (!(t > 0.0)) throw std::domain_error("mapped_kernel: requires t > 0");
    const MappedCoords mc = transform_coords(prof, x, xp, t);
    const double phase = 0.5*p.m/p.hbar*
        (x*x*prof.Cdot(t)/prof.C(t) - xp*xp*prof.Cdot(0.0)/prof.C(0.0));
    return mc.prefactor*std::exp(Complex{0.0, phase})*
           base(mc.x_tilde, mc.t_tilde, mc.x_tilde_prime);
}

}  // namespace tdwell
