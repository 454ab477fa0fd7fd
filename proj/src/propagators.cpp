#include "tdwell/propagators.hpp"

#include <cmath>
#include <stdexcept>

#include "tdwell/errors.hpp"
#include "tdwell/special_functions.hpp"

namespace tdwell {

namespace {

const Complex kI{0.0, 1.0};

void require_time(double t) {
    if (!(t > 0.0)) throw std::domain_error("propagator: requires t > 0");
}

void require_finite(double x, double xp) {
    if (!std::isfinite(x) || !std::isfinite(xp))
        throw std::domain_error("propagator: non-finite position");
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Free: return "Free";
        case Family::InvertedOsc: return "InvertedOsc";
        case Family::StaticDeltaFree: return "StaticDeltaFree";
        case Family::TdDeltaInvertedOsc: return "TdDeltaInvertedOsc";
        case Family::CoshWell: return "CoshWell";
    }
    return "?";
}

Complex k_free(const PhysicalParams& p, double x, double t, double xp) {
    require_time(t);
    require_finite(x, xp);
    const double d = x - xp;
    const double amp = std::sqrt(p.m/(2.0*kPi*p.hbar*t));
    return amp*kExpMinusIPiQuarter*std::exp(Complex{0.0, p.m*d*d/(2.0*p.hbar*t)});
}

Complex k_isho(const PhysicalParams& p, double x, double t, double xp) {
    require_time(t);
    require_finite(x, xp);
    if (!(p.omega > 0.0)) throw std::domain_error("k_isho: requires omega > 0");
    const double wt = p.omega*t;
    const double s = std::sinh(wt), c = std::cosh(wt);
    const double amp = std::sqrt(p.m*p.omega/(2.0*kPi*p.hbar*s));
    const double phase = p.m*p.omega*((x*x + xp*xp)*c - 2.0*x*xp)/(2.0*p.hbar*s);
    return amp*kExpMinusIPiQuarter*std::exp(Complex{0.0, phase});
}

Complex psi_cap(const PhysicalParams& p, double x, double t) {
    require_time(t);
    if (!std::isfinite(x)) throw std::domain_error("psi_cap: non-finite position");
    if (!(p.omega > 0.0) || !(p.v0 > 0.0))
        throw std::domain_error("psi_cap: requires omega > 0 and v0 > 0");
    const double wt = p.omega*t;
    const double coth = 1.0/std::tanh(wt), csch = 1.0/std::sinh(wt);
    const double tau = p.hbar*std::tanh(wt)/(p.m*p.omega);
    const Complex kappa{0.0, -p.m*p.v0/(p.hbar*p.hbar)};
    const double drift = x*p.m*p.omega*(coth - csch)/p.hbar;
    const double pref = std::sqrt(p.m*p.v0/std::cosh(wt))/p.hbar;
    return pref*(moshinsky(x, kappa + drift, tau) + moshinsky(-x, kappa - drift, tau));
}

Complex k_delta_static(const PhysicalParams& p, double x, double t, double xp) {
    require_time(t);
    require_finite(x, xp);
    if (!(p.v0 > 0.0)) throw std::domain_error("k_delta_static: requires v0 > 0");
    const double kap = p.m*p.v0/(p.hbar*p.hbar);
    return k_free(p, x, t, xp) +
           kap*moshinsky(std::abs(x) + std::abs(xp), Complex{0.0, kap}, p.hbar*t/p.m);
}

Complex k_td_full(const PhysicalParams& p, double x, double t, double xp) {
    require_time(t);
    require_finite(x, xp);
    if (!(p.omega > 0.0)) throw std::domain_error("k_td_full: requires omega > 0");
    Complex kv{0.0, 0.0};
    if (p.v0 > 0.0) {
        const double kap = p.m*p.v0/(p.hbar*p.hbar);
        const double wt = p.omega*t;
        const double tau = p.hbar*(1.0 - std::exp(-2.0*wt))/(2.0*p.omega*p.m);
        const Complex gauge{0.0, p.m*p.omega*(x*x - xp*xp)/(2.0*p.hbar)};
        kv = kap*std::exp(gauge - 0.5*wt)*
             moshinsky(std::exp(-wt)*std::abs(x) + std::abs(xp), Complex{0.0, kap}, tau);
    }
    return k_isho(p, x, t, xp) + kv;
}

double cosh_profile(const CoshParams& cp, double x) {
    return 0.5*(cp.alpha*std::exp(cp.mu*x) + std::exp(-cp.mu*x));
}

Complex k_cosh(const PhysicalParams& p, const CoshParams& cp, double x, double t, double xp) {
    require_time(t);
    require_finite(x, xp);
    cp.validate();
    const double tau = t*p.hbar/p.m;
    const double d = x - xp;
    const Complex stat = std::exp(Complex{0.0, cp.mu*cp.mu*p.hbar*t/(2.0*p.m)});
    const Complex muk{0.0, -cp.mu};
    const Complex scatter = std::exp(cp.mu*(-d))*moshinsky(d, muk, tau) +
                            std::exp(cp.mu*d)*moshinsky(-d, muk, tau);
    const double geom = cp.alpha*cp.mu/(2.0*cosh_profile(cp, x)*cosh_profile(cp, xp));
    return k_free(p, x, t, xp) + geom*(stat - scatter);
}

double psi_delta(const PhysicalParams& p, double x) {
    if (!(p.v0 > 0.0)) throw std::domain_error("psi_delta: requires v0 > 0");
    return std::sqrt(p.m*p.v0)/p.hbar*std::exp(-p.m*p.v0*std::abs(x)/(p.hbar*p.hbar));
}

double psi_ch(const CoshParams& cp, double x) {
    cp.validate();
    return std::sqrt(2.0*cp.alpha*cp.mu)/(2.0*cosh_profile(cp, x));
}

double v_background(const PhysicalParams& p, Family family, double x) {
    switch (family) {
        case Family::InvertedOsc:
        case Family::TdDeltaInvertedOsc:
            return -0.5*p.m*p.omega*p.omega*x*x;
        default:
            return 0.0;
    }
}

double v_cosh(const PhysicalParams& p, const CoshParams& cp, double x) {
    const double ch = cosh_profile(cp, x);
    return -cp.alpha*cp.mu*cp.mu*p.hbar*p.hbar/(p.m*ch*ch);
}

PropagatorHandle PropagatorHandle::free_particle(const PhysicalParams& p) {
    return {Family::Free, p, std::nullopt};
}
PropagatorHandle PropagatorHandle::inverted_osc(const PhysicalParams& p) {
    return {Family::InvertedOsc, p, std::nullopt};
}
PropagatorHandle PropagatorHandle::static_delta(const PhysicalParams& p) {
    return {Family::StaticDeltaFree, p, std::nullopt};
}
PropagatorHandle PropagatorHandle::td_delta_inverted_osc(const PhysicalParams& p) {
    return {Family::TdDeltaInvertedOsc, p, std::nullopt};
}
PropagatorHandle PropagatorHandle::cosh_well(const PhysicalParams& p, const CoshParams& cp) {
    return {Family::CoshWell, p, cp};
}

Complex PropagatorHandle::operator()(double x, double t, double xp) const {
    switch (family) {
        case Family::Free: return k_free(params, x, t, xp);
        case Family::InvertedOsc: return k_isho(params, x, t, xp);
        case Family::StaticDeltaFree: return k_delta_static(params, x, t, xp);
        case Family::TdDeltaInvertedOsc: return k_td_full(params, x, t, xp);
        case Family::CoshWell:
            if (!cosh_params)
                throw std::invalid_argument("PropagatorHandle: CoshWell requires cosh_params");
            return k_cosh(params, *cosh_params, x, t, xp);
    }
    throw std::logic_error("PropagatorHandle: unknown family");
}

}  // namespace tdwell
