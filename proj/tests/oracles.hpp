// Test-side oracles, independent of the library paths they check:
// epsilon-damped quadrature with Richardson extrapolation for purely
// oscillatory integrals, the eta-regularized numeric Laplace transform of a
// kernel, and small series references.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "tdwell/physical.hpp"
#include "tdwell/quadrature.hpp"
#include "tdwell/types.hpp"

namespace tdwell::testing {

inline Complex romberg_limit(const std::vector<Complex>& vals) {
    std::vector<Complex> t = vals;
    const std::size_t n = vals.size();
    std::vector<Complex> prev = t;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Complex> cur(n - k);
        const double w = std::pow(2.0, static_cast<double>(k));
        for (std::size_t j = 0; j + k < n; ++j)
            cur[j] = (w*prev[j + 1] - prev[j])/(w - 1.0);
        prev = cur;
    }
    return prev[0];
}

/// Integral of a purely oscillatory integrand over (a, b) (possibly
/// infinite): damp with e^{-eps x^2} at eps0/2^j, j = 0..levels-1, and
/// Richardson-extrapolate eps -> 0.
inline Complex damped_oscillatory_integral(const std::function<Complex(double)>& f,
                                           double a, double b, double eps0 = 0.1,
                                           int levels = 6) {
    QuadratureConfig cfg;
    cfg.abs_tol = 2e-13;
    cfg.rel_tol = 2e-12;
    cfg.max_depth = 56;
    std::vector<Complex> vals;
    for (int j = 0; j < levels; ++j) {
        const double eps = eps0/std::pow(2.0, j);
        auto g = [&](double x) { return f(x)*std::exp(-eps*x*x); };
        vals.push_back(integrate_line(g, a, b, cfg).value);
    }
    return romberg_limit(vals);
}

/// Numeric Laplace transform (1/i hbar) int_0^inf e^{i(E+i eta)t/hbar} K(t) dt
/// with the 6-level eta-Romberg ladder {0.2 ... 0.00625} hbar*omega and, for
/// kernels with an oscillatory t->0 head (head_a = m x^2/(2 hbar) > 0), the
/// integration-by-parts boundary correction at delta.
inline Complex laplace_oracle(const std::function<Complex(double)>& kernel_t,
                              const PhysicalParams& p, Complex E, double head_a) {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-11;
    cfg.max_depth = 52;
    const Complex i{0.0, 1.0};
    std::vector<Complex> vals;
    for (int j = 0; j < 6; ++j) {
        const double eta = 0.2*p.hbar*p.omega/std::pow(2.0, j);
        auto f = [&](double t) {
            return std::exp(i*(E + i*eta)*t/p.hbar)*kernel_t(t);
        };
        Complex total;
        if (head_a > 0.0) {
            const double delta = 1e-4;
            const Complex head_h = f(delta)*std::exp(-i*head_a/delta);
            const Complex corr = (i/head_a)*delta*delta*head_h*std::exp(i*head_a/delta);
            total = integrate_segments(f, {delta, 0.01, 1.0, 10.0,
                                           std::numeric_limits<double>::infinity()},
                                       cfg).value + corr;
        } else {
            total = integrate_segments(f, {0.0, 1.0, 10.0,
                                           std::numeric_limits<double>::infinity()},
                                       cfg).value;
        }
        vals.push_back(total/(i*p.hbar));
    }
    return romberg_limit(vals);
}

/// erf by its Maclaurin series (test reference for small arguments).
inline Complex erf_series(Complex z) {
    Complex term = z, sum = z;
    for (int n = 1; n < 200; ++n) {
        term *= -z*z/static_cast<double>(n);
        const Complex add = term/static_cast<double>(2*n + 1);
        sum += add;
        if (std::abs(add) < 1e-18*std::abs(sum)) break;
    }
    return 2.0/std::sqrt(kPi)*sum;
}

}  // namespace tdwell::testing
