#pragma once

#include "tdwell/physical.hpp"
#include "tdwell/types.hpp"

namespace tdwell {

/// Free-particle kernel sqrt(m/(2 pi i hbar t)) exp[i m (x-x')^2/(2 hbar t)],
/// principal square root (phase e^{-i pi/4}). Requires t > 0.
Complex k_free(const PhysicalParams& p, double x, double t, double xp);

/// Inverted-oscillator kernel (Eq. for the repelling oscillator); the
/// prefactor branch is e^{-i pi/4}/sqrt(sinh wt), continuous in t from the
/// free-particle phase. Requires t > 0, omega > 0.
Complex k_isho(const PhysicalParams& p, double x, double t, double xp);

/// Closed-form evolved state of the delta-well bound state under the
/// inverted oscillator: two Moshinsky terms with composite wavenumbers.
/// The prefactor is sqrt(m V0 / cosh(wt))/hbar (the printed coth is a typo;
/// fixed by the quadrature cross-check, which is the designated arbiter).
Complex psi_cap(const PhysicalParams& p, double x, double t);

/// Static attractive delta well in free space:
/// K_free + (m V0/hbar^2) M(|x|+|x'|, +i m V0/hbar^2, hbar t/m).
Complex k_delta_static(const PhysicalParams& p, double x, double t, double xp);

/// Exponentially decaying delta well on top of the inverted oscillator:
/// K_isho + K_V with
/// K_V = (m V0/hbar^2) e^{i m w (x^2-x'^2)/(2 hbar)} e^{-w t/2}
///       M(e^{-w t}|x| + |x'|, i m V0/hbar^2, hbar (1-e^{-2 w t})/(2 w m)).
Complex k_td_full(const PhysicalParams& p, double x, double t, double xp);

/// cosh-well (Jauslin) kernel: K_free plus the bound/scattering correction
/// built from two Moshinsky terms.
Complex k_cosh(const PhysicalParams& p, const CoshParams& cp, double x, double t, double xp);

/// ch(alpha, mu, x) = (alpha e^{mu x} + e^{-mu x})/2.
double cosh_profile(const CoshParams& cp, double x);

/// Normalized delta-well bound state sqrt(m V0)/hbar e^{-m V0 |x|/hbar^2}.
double psi_delta(const PhysicalParams& p, double x);

/// Normalized cosh-well bound state sqrt(2 alpha mu)/(2 ch(alpha,mu,x)).
double psi_ch(const CoshParams& cp, double x);

/// Time-dependent potential that k_td_full propagates (delta well realized
/// only in the oracle; here the smooth background for residual checks).
double v_background(const PhysicalParams& p, Family family, double x);

/// V_ch(x) = -alpha mu^2 hbar^2/(m ch^2(alpha,mu,x)).
double v_cosh(const PhysicalParams& p, const CoshParams& cp, double x);

}  // namespace tdwell
