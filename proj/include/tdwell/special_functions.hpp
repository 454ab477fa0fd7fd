#pragma once

#include "tdwell/types.hpp"

namespace tdwell {

/// Arguments of the Moshinsky function M(x,k,t). The definition carries
/// implicit units (hbar = m = 1); callers pass pre-scaled, dimensionless
/// values (lengths x, wavenumbers k and "times" t = hbar*t_phys/m already
/// divided out).
struct MoshArgs {
    double x;
    Complex k;
    double t;  // strictly positive
};

/// Euler Gamma, principal value. Lanczos approximation (g=7, 9 coefficients)
/// with reflection for Re z < 0.5; relative error <~ 2e-13 for |z| <= 50.
/// Throws GammaPoleError at non-positive integers.
Complex gamma_c(Complex z);

/// A branch of log Gamma such that exp(log_gamma(z)) == gamma_c(z) exactly
/// (the imaginary part is not reduced to the principal sheet).
Complex log_gamma(Complex z);

/// 1/Gamma(z); zero at the poles of Gamma instead of throwing.
Complex rgamma_c(Complex z);

/// Euler Beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), computed through
/// log-Gamma so that moderate-|a|,|b| arguments never overflow.
Complex beta_c(Complex a, Complex b);

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz). Modified trapezoid rule with
/// pole-residue correction; ~1e-13 relative accuracy over the plane (in the
/// lower half-plane the accuracy is that of 2e^{-z^2} - w(-z)).
Complex faddeeva_w(Complex z);

/// Complementary error function, principal branch, via the Faddeeva function.
Complex erfc_c(Complex z);

/// Scaled complementary error function e^{z^2} erfc(z) = w(iz). Never forms
/// the overflowing pieces separately.
Complex erfcx_c(Complex z);

/// Moshinsky function
///   M(x,k,t) = 1/2 exp(ikx - ik^2 t/2) erfc[e^{-i pi/4}(x - kt)/sqrt(2t)].
/// For strongly bound-state-like k (large |Im k|) the product is evaluated in
/// a fused form M = 1/2 e^{i x^2/(2t)} w(e^{i pi/4}(x-kt)/sqrt(2t)), which is
/// algebraically identical and free of intermediate overflow.
/// Throws std::domain_error for t <= 0 or non-finite arguments.
Complex moshinsky(const MoshArgs& args);
Complex moshinsky(double x, Complex k, double t);

/// Weber parabolic cylinder function D_nu(z) via the confluent-hypergeometric
/// representation (two Kummer terms, summed in quad precision), backed by the
/// Tricomi-U Laplace integral for large |z^2/2| and reflection formulas for
/// Re z < 0. Validated to ~1e-9 relative for |z| <= 10, |nu| <= 10.
/// Throws ConvergenceError if the series/quadrature tolerance is not met.
Complex pcf_d(Complex nu, Complex z);

/// Kummer confluent hypergeometric M(a,b,x) (series in quad precision with
/// the Kummer transformation for Re x < 0). Exposed for cross-checks.
Complex kummer_m(Complex a, Complex b, Complex x);

}  // namespace tdwell
