#pragma once

#include <vector>

#include "tdwell/physical.hpp"
#include "tdwell/types.hpp"

namespace tdwell {

/// Resonance pole E_r - (i/2) E_i of the delta well in the inverted
/// oscillator, with the derived lifetime hbar/E_i.
struct PoleResult {
    Complex e_pole;
    double e_r = 0.0;
    double e_i = 0.0;  // -2 Im(e_pole)
    double lifetime = 0.0;
    double hbar = 1.0;
    int newton_iters = 0;
    double residual = 0.0;  // |1 + V0 G0(0,0;E)| at the returned pole
};

/// G0(0,0;E) of the inverted oscillator:
///   (1/(2 i hbar w)) sqrt(m w/(pi i hbar)) B[E/(2 i hbar w) + 1/4, 1/2],
/// principal branches, sqrt(1/i) = e^{-i pi/4}. Throws GammaPoleError
/// exactly on the Gamma-pole ladder.
Complex g0_origin_isho(const PhysicalParams& p, Complex E);

/// G0(x,0;E) of the inverted oscillator via the parabolic cylinder function:
///   (2^{-3/4+s}/(i hbar)) sqrt(m/(i pi hbar w)) Gamma(1/4+s)
///     D_{-1/2-2s}(sqrt(2)|x| sqrt(m w/(i hbar))),  s = E/(2 i hbar w).
Complex g0_offorigin_isho(const PhysicalParams& p, double x, Complex E);

/// Resolvent of H0 - V0 delta(x):
///   G(x,x';E) = G0 - V0 G0(x,0)G0(0,x')/(1 + V0 G0(0,0)).
/// Only the source-at-origin column is available (one of x, x' must be 0).
Complex resolvent_delta(const PhysicalParams& p, double x, double xp, Complex E);

/// Complex Newton iteration on f(E) = 1 + V0 G0(0,0;E), seeded at the free
/// binding energy shifted into the lower half-plane, with an omega-ladder
/// continuation fallback. Deterministic. Throws PoleSearchError on
/// non-convergence.
PoleResult find_delta_pole(const PhysicalParams& p);

/// First n Gamma-ladder poles E_Gamma^(k) = -i hbar w (k + 1/2), k = 0,2,4,...
std::vector<Complex> gamma_pole_ladder(const PhysicalParams& p, int count);

/// hbar/E_i. Throws DegenerateLifetimeError if E_i <= 0.
double lifetime_estimate(const PoleResult& pole);

}  // namespace tdwell
