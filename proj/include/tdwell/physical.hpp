#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "tdwell/types.hpp"

namespace tdwell {

/// Any evaluatable kernel K(x, t | x', 0).
using KernelFn = std::function<Complex(double x, double t, double xp)>;

/// Parameter bundle (m, hbar, omega, V0) defining a Hamiltonian instance.
/// Atomic-unit defaults m = hbar = 1; omega = 0 selects free / static-delta
/// limits.
struct PhysicalParams {
    double m = 1.0;
    double hbar = 1.0;
    double omega = 0.0;
    double v0 = 0.0;

    void validate() const {
        if (!(m > 0.0) || !(hbar > 0.0))
            throw std::invalid_argument("PhysicalParams: m and hbar must be positive");
        if (omega < 0.0 || v0 < 0.0)
            throw std::invalid_argument("PhysicalParams: omega and v0 must be >= 0");
    }

    // Characteristic scales of the delta-well bound state.
    double bound_length() const { return hbar*hbar/(m*v0); }
    double bound_energy() const { return -0.5*m*v0*v0/(hbar*hbar); }
};

/// Parameters of the cosh-type well V_ch(x) = -alpha mu^2 hbar^2 / (m ch^2),
/// ch(alpha,mu,x) = (alpha e^{mu x} + e^{-mu x})/2.
struct CoshParams {
    double alpha = 1.0;
    double mu = 1.0;

    void validate() const {
        if (!(alpha > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("CoshParams: alpha and mu must be positive");
    }
};

enum class Family {
    Free,
    InvertedOsc,
    StaticDeltaFree,
    TdDeltaInvertedOsc,
    CoshWell,
};

const char* family_name(Family f);

/// Evaluatable kernel K(x,t|x',0) for one of the five analytic families.
struct PropagatorHandle {
    Family family = Family::Free;
    PhysicalParams params;
    std::optional<CoshParams> cosh_params;

    static PropagatorHandle free_particle(const PhysicalParams& p);
    static PropagatorHandle inverted_osc(const PhysicalParams& p);
    static PropagatorHandle static_delta(const PhysicalParams& p);
    static PropagatorHandle td_delta_inverted_osc(const PhysicalParams& p);
    static PropagatorHandle cosh_well(const PhysicalParams& p, const CoshParams& cp);

    Complex operator()(double x, double t, double xp) const;
};

}  // namespace tdwell
