#include "tdwell/spectral.hpp"

#include <cmath>
#include <limits>

#include "tdwell/errors.hpp"
#include "tdwell/special_functions.hpp"

namespace tdwell {

namespace {
const Complex kI{0.0, 1.0};

void require_isho(const PhysicalParams& p) {
    p.validate();
    if (!(p.omega > 0.0)) throw std::domain_error("spectral: requires omega > 0");
}
}  // namespace

Complex g0_origin_isho(const PhysicalParams& p, Complex E) {
    require_isho(p);
    if (!is_finite(E)) throw std::domain_error("g0_origin_isho: non-finite energy");
    const double hw = p.hbar*p.omega;
    const Complex s = -kI*E/(2.0*hw);
    const Complex root = std::sqrt(p.m*p.omega/(kPi*p.hbar))*kExpMinusIPiQuarter;
    return -kI/(2.0*hw)*root*beta_c(s + 0.25, Complex{0.5, 0.0});
}

Complex g0_offorigin_isho(const PhysicalParams& p, double x, Complex E) {
    require_isho(p);
    if (!is_finite(E) || !std::isfinite(x))
        throw std::domain_error("g0_offorigin_isho: non-finite argument");
    const double hw = p.hbar*p.omega;
    const Complex s = -kI*E/(2.0*hw);
    const Complex nu = -0.5 - 2.0*s;
    const Complex arg = std::sqrt(2.0*p.m*p.omega/p.hbar)*std::abs(x)*kExpMinusIPiQuarter;
    const Complex pow2 = std::exp((s - 0.75)*std::log(2.0));
    const Complex root = std::sqrt(p.m/(kPi*p.hbar*p.omega))*kExpMinusIPiQuarter;
    return -kI/p.hbar*pow2*root*gamma_c(0.25 + s)*pcf_d(nu, arg);
}

Complex resolvent_delta(const PhysicalParams& p, double x, double xp, Complex E) {
    require_isho(p);
    if (x != 0.0 && xp != 0.0)
        throw std::invalid_argument(
            "resolvent_delta: one argument must be the origin (full two-point G0 "
            "is not provided)");
    auto g0 = [&](double a, double b) {
        const double r = (a == 0.0) ? b : a;
        return (r == 0.0) ? g0_origin_isho(p, E) : g0_offorigin_isho(p, r, E);
    };
    if (p.v0 == 0.0) return g0(x, xp);
    const Complex denom = 1.0 + p.v0*g0_origin_isho(p, E);
    if (denom == Complex{0.0, 0.0})
        throw std::domain_error("resolvent_delta: evaluated exactly at a pole");
    return g0(x, xp) - p.v0*g0(x, 0.0)*g0(0.0, xp)/denom;
}

namespace {

struct NewtonOutcome {
    Complex root;
    double residual;
    int iters;
    bool converged;
};

NewtonOutcome newton_pole(const PhysicalParams& p, Complex seed) {
    const double hw = p.hbar*p.omega;
    const double step = 1e-6*hw;
    auto f = [&](Complex E) { return 1.0 + p.v0*g0_origin_isho(p, E); };
    Complex E = seed;
    Complex fE = f(E);
    int it = 0;
    for (; it < 100; ++it) {
        if (std::abs(fE) < 1e-12) return {E, std::abs(fE), it, true};
        const Complex df = (f(E + step) - f(E - step))/(2.0*step);
        if (!is_finite(df) || df == Complex{0.0, 0.0}) break;
        const Complex En = E - fE/df;
        if (!is_finite(En)) break;
        E = En;
        fE = f(E);
        if (!is_finite(fE)) break;
    }
    return {E, std::abs(fE), it, std::abs(fE) < 1e-12};
}

}  // namespace

PoleResult find_delta_pole(const PhysicalParams& p) {
    require_isho(p);
    if (!(p.v0 > 0.0)) throw std::domain_error("find_delta_pole: requires v0 > 0");

    auto seed_for = [&](double omega) {
        return Complex{-0.5*p.m*p.v0*p.v0/(p.hbar*p.hbar), -0.05*p.hbar*omega};
    };

    int total_iters = 0;
    NewtonOutcome out = newton_pole(p, seed_for(p.omega));
    total_iters += out.iters;
    if (!out.converged) {
        // omega-ladder continuation from 0.1*omega_target
        constexpr int kRungs = 12;
        PhysicalParams q = p;
        q.omega = 0.1*p.omega;
        Complex guess = seed_for(q.omega);
        for (int r = 0; r <= kRungs; ++r) {
            q.omega = 0.1*p.omega*std::pow(10.0, static_cast<double>(r)/kRungs);
            out = newton_pole(q, guess);
            total_iters += out.iters;
            if (!out.converged)
                throw PoleSearchError("find_delta_pole: ladder rung did not converge");
            guess = out.root;
        }
    }

    PoleResult res;
    res.e_pole = out.root;
    res.e_r = out.root.real();
    res.e_i = -2.0*out.root.imag();
    res.hbar = p.hbar;
    res.lifetime = res.e_i > 0.0 ? p.hbar/res.e_i
                                 : std::numeric_limits<double>::infinity();
    res.newton_iters = total_iters;
    res.residual = out.residual;
    return res;
}

std::vector<Complex> gamma_pole_ladder(const PhysicalParams& p, int count) {
    require_isho(p);
    if (count < 1) throw std::invalid_argument("gamma_pole_ladder: count >= 1");
    std::vector<Complex> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        const double k = 2.0*j;
        out.emplace_back(0.0, -p.hbar*p.omega*(k + 0.5));
    }
    return out;
}

double lifetime_estimate(const PoleResult& pole) {
    if (!(pole.e_i > 0.0))
        throw DegenerateLifetimeError("lifetime_estimate: pole has Im E >= 0");
    return pole.hbar/pole.e_i;
}

}  // namespace tdwell
