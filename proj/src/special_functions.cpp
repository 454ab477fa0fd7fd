#include "tdwell/special_functions.hpp"

#include <array>
#include <algorithm>
#include <cmath>

#include "tdwell/errors.hpp"
#include "tdwell/quadrature.hpp"

namespace tdwell {

namespace {

const double kSqrtPi = std::sqrt(kPi);
const double kSqrt2Pi = std::sqrt(2.0*kPi);
const Complex kI{0.0, 1.0};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// ---------------------------------------------------------------------------
// Gamma: Lanczos approximation, g = 7, 9 coefficients.

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_sum(Complex zm1) {
    Complex a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i]/(zm1 + static_cast<double>(i));
    return a;
}

// log(sin(pi z)) on some branch, stable for large |Im z|.
Complex log_sin_pi(Complex z) {
    const double y = z.imag();
    if (y > 8.0) {
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
        return -kI*kPi*z + std::log(1.0 - std::exp(2.0*kI*kPi*z)) - std::log(2.0*kI) + Complex{0.0, kPi};
    }
    if (y < -8.0) {
        return kI*kPi*z + std::log(1.0 - std::exp(-2.0*kI*kPi*z)) - std::log(2.0*kI);
    }
    return std::log(std::sin(kPi*z));
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!is_finite(z)) throw std::domain_error("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z))
        throw GammaPoleError("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + kLanczosG + 0.5;
    return 0.5*std::log(2.0*kPi) + (zm1 + 0.5)*std::log(t) - t + std::log(lanczos_sum(zm1));
}

Complex gamma_c(Complex z) {
    if (!is_finite(z)) throw std::domain_error("gamma_c: non-finite argument");
    if (is_nonpositive_integer(z))
        throw GammaPoleError("gamma_c: pole at non-positive integer");
    if (z.real() < 0.5) {
        return kPi/(std::sin(kPi*z)*gamma_c(1.0 - z));
    }
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + kLanczosG + 0.5;
    return kSqrt2Pi*std::exp((zm1 + 0.5)*std::log(t) - t)*lanczos_sum(zm1);
}

Complex rgamma_c(Complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return 1.0/gamma_c(z);
}

Complex beta_c(Complex a, Complex b) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) ||
        is_nonpositive_integer(a + b))
        throw GammaPoleError("beta_c: argument on the Gamma pole set");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

// ---------------------------------------------------------------------------
// Faddeeva function: modified trapezoid/midpoint rule over e^{-t^2}/(z-t)
// with the pole-residue correction 2 e^{-z^2}/(1 -+ e^{-2 pi i z / h}).
// The rule whose node lattice is farther from Re z is selected, which keeps
// every summand and the correction denominator well conditioned.

namespace {

constexpr double kWH = 0.5;   // lattice spacing
constexpr int kWN = 13;       // nodes cover |t| <= 6.5, e^{-t^2} <= 4e-19

struct WTables {
    std::array<double, 2*kWN> tmid, emid;      // (k+1/2)h, k = -N..N-1
    std::array<double, 2*kWN + 1> ttrap, etrap;  // k h, k = -N..N
    WTables() {
        for (int k = -kWN; k < kWN; ++k) {
            const double t = (k + 0.5)*kWH;
            tmid[k + kWN] = t;
            emid[k + kWN] = std::exp(-t*t);
        }
        for (int k = -kWN; k <= kWN; ++k) {
            const double t = k*kWH;
            ttrap[k + kWN] = t;
            etrap[k + kWN] = std::exp(-t*t);
        }
    }
};
const WTables kW;

Complex faddeeva_upper(Complex z) {
    const double x = z.real(), y = z.imag();
    const double frac = x/kWH - std::floor(x/kWH);
    const bool use_mid = std::abs(frac - 0.5) >= 0.25;
    Complex s{0.0, 0.0};
    if (use_mid) {
        for (std::size_t j = 0; j < kW.tmid.size(); ++j)
            s += kW.emid[j]/(z - kW.tmid[j]);
    } else {
        for (std::size_t j = 0; j < kW.ttrap.size(); ++j)
            s += kW.etrap[j]/(z - kW.ttrap[j]);
    }
    Complex w = Complex{0.0, kWH/kPi}*s;
    if (y < kPi/kWH) {
        const Complex e = std::exp(-2.0*kI*kPi*z/kWH);
        w += use_mid ? 2.0*std::exp(-z*z)/(1.0 + e)
                     : 2.0*std::exp(-z*z)/(1.0 - e);
    }
    return w;
}

}  // namespace

Complex faddeeva_w(Complex z) {
    if (!is_finite(z)) throw std::domain_error("faddeeva_w: non-finite argument");
    if (z.imag() >= 0.0) return faddeeva_upper(z);
    return 2.0*std::exp(-z*z) - faddeeva_upper(-z);
}

Complex erfc_c(Complex z) {
    if (!is_finite(z)) throw std::domain_error("erfc_c: non-finite argument");
    if (z.real() >= 0.0) {
        return std::exp(-z*z)*faddeeva_upper(kI*z);  // iz is in the upper half-plane
    }
    return 2.0 - std::exp(-z*z)*faddeeva_upper(-kI*z);
}

Complex erfcx_c(Complex z) {
    if (!is_finite(z)) throw std::domain_error("erfcx_c: non-finite argument");
    return faddeeva_w(kI*z);
}

// ---------------------------------------------------------------------------
// Moshinsky function.

Complex moshinsky(const MoshArgs& args) {
    const double x = args.x, t = args.t;
    const Complex k = args.k;
    if (!(t > 0.0)) throw std::domain_error("moshinsky: requires t > 0");
    if (!std::isfinite(x) || !std::isfinite(t) || !is_finite(k))
        throw std::domain_error("moshinsky: non-finite argument");
    const double ik = std::abs(k.imag());
    const double severity = ik*std::abs(x) + ik*ik*t*0.5;
    const Complex shift = (x - k*t)/std::sqrt(2.0*t);
    if (severity <= 30.0) {
        return 0.5*std::exp(kI*k*x - 0.5*kI*k*k*t)*erfc_c(kExpMinusIPiQuarter*shift);
    }
    // fused: M = 1/2 e^{i x^2/(2t)} w(e^{i pi/4}(x-kt)/sqrt(2t))
    return 0.5*std::exp(Complex{0.0, x*x/(2.0*t)})*faddeeva_w(kExpPlusIPiQuarter*shift);
}

Complex moshinsky(double x, Complex k, double t) {
    return moshinsky(MoshArgs{x, k, t});
}

// ---------------------------------------------------------------------------
// Parabolic cylinder D_nu(z).
//
// Kummer two-term representation summed in __float128 for |z^2/2| <= 12 (and
// for the sector where the Kummer transformation removes the growth), the
// Tricomi-U Laplace integral with a rotated contour for larger |z^2/2|, and
// the reflection connection for Re z < 0. Forward recurrence in nu (stable;
// D_nu is dominant for growing Re nu) lifts the U route out of its
// Re(order) < -3 seed strip.

namespace {

using F128 = __float128;

struct C128 {
    F128 re, im;
    C128() : re(0), im(0) {}
    C128(F128 r, F128 i) : re(r), im(i) {}
    explicit C128(double r) : re(r), im(0) {}
    explicit C128(Complex z) : re(z.real()), im(z.imag()) {}
};

inline C128 operator+(C128 a, C128 b) { return {a.re + b.re, a.im + b.im}; }
inline C128 operator-(C128 a, C128 b) { return {a.re - b.re, a.im - b.im}; }
inline C128 operator*(C128 a, C128 b) {
    return {a.re*b.re - a.im*b.im, a.re*b.im + a.im*b.re};
}
inline C128 operator/(C128 a, C128 b) {
    const F128 d = b.re*b.re + b.im*b.im;
    return {(a.re*b.re + a.im*b.im)/d, (a.im*b.re - a.re*b.im)/d};
}
inline F128 abs2(C128 a) { return a.re*a.re + a.im*a.im; }
inline Complex to_complex(C128 a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

C128 kummer_series_f128(Complex a, Complex b, Complex x) {
    C128 term(1.0), sum(1.0);
    const C128 xx(x);
    const F128 tol2 = F128(1e-35)*F128(1e-35);
    const F128 floor2 = F128(1e-300)*F128(1e-300);  // absolute floor for |sum| ~ 0
    for (int n = 0; n < 700; ++n) {
        C128 num(a); num.re += n;
        C128 den(b); den.re += n;
        term = term*(num/den)*xx/C128(static_cast<double>(n + 1));
        sum = sum + term;
        if (n > 3 && abs2(term) <= tol2*abs2(sum) + floor2)
            return sum;
    }
    throw ConvergenceError("kummer_m: series tolerance not met");
}

C128 kummer_f128(Complex a, Complex b, Complex x) {
    if (x.real() < 0.0) {
        // Kummer transformation M(a,b,x) = e^x M(b-a, b, -x)
        return kummer_series_f128(b - a, b, -x)*C128(std::exp(x));
    }
    return kummer_series_f128(a, b, x);
}

// D_nu via GR 9.240 (the paper's cited representation).
Complex pcf_kummer_rep(Complex nu, Complex z) {
    const Complex x = 0.5*z*z;
    const C128 m1 = kummer_f128(-0.5*nu, Complex{0.5, 0.0}, x);
    const C128 m2 = kummer_f128(0.5*(1.0 - nu), Complex{1.5, 0.0}, x);
    const Complex c1 = kSqrtPi*rgamma_c(0.5*(1.0 - nu));
    const Complex c2 = kSqrt2Pi*rgamma_c(-0.5*nu);
    const C128 bracket = C128(c1)*m1 - C128(c2*z)*m2;
    return std::exp(0.5*nu*std::log(2.0) - 0.25*z*z)*to_complex(bracket);
}

// Tricomi U(a, b, x) by the Laplace integral along a rotated ray,
// t = e^{i theta} u^3 (the cube substitution smooths the endpoint).
Complex tricomi_u_quad(Complex a, Complex b, Complex x) {
    const double theta = std::clamp(-std::arg(x), -0.42*kPi, 0.42*kPi);
    const Complex rot{std::cos(theta), std::sin(theta)};
    const Complex pw1 = a - 1.0, pw2 = b - a - 1.0;
    auto f = [&](double u) -> Complex {
        const double u3 = u*u*u;
        const Complex t = rot*u3;
        return std::exp(-x*t + pw1*(3.0*std::log(u) + Complex{0.0, theta}) +
                        pw2*std::log(1.0 + t))*rot*(3.0*u*u);
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-280;
    cfg.rel_tol = 1e-12;
    cfg.max_depth = 52;
    const QuadResult r = integrate_line(f, 0.0, std::numeric_limits<double>::infinity(), cfg);
    return r.value*rgamma_c(a);
}

Complex pcf_from_u(Complex nu, Complex z) {
    return std::exp(0.5*nu*std::log(2.0) - 0.25*z*z)*
           tricomi_u_quad(-0.5*nu, Complex{0.5, 0.0}, 0.5*z*z);
}

Complex pcf_u_route(Complex nu, Complex z) {
    if (nu.real() < -3.0) return pcf_from_u(nu, z);
    const int k = static_cast<int>(std::floor(nu.real())) + 4;  // Re(nu-k) in [-4,-3)
    const Complex nu0 = nu - static_cast<double>(k);
    Complex d0 = pcf_from_u(nu0, z);
    Complex d1 = pcf_from_u(nu0 + 1.0, z);
    for (int j = 0; j < k - 1; ++j) {
        const Complex d2 = z*d1 - (nu0 + static_cast<double>(j + 1))*d0;
        d0 = d1;
        d1 = d2;
    }
    return d1;
}

Complex pcf_d_right(Complex nu, Complex z) {  // Re z >= 0
    const Complex x = 0.5*z*z;
    const double ax = std::abs(x);
    if (ax <= 12.0) return pcf_kummer_rep(nu, z);
    if (std::abs(std::arg(x)) <= 0.75*kPi) return pcf_u_route(nu, z);
    return pcf_kummer_rep(nu, z);  // arg(-x) < pi/4: transformed series is benign
}

}  // namespace

Complex kummer_m(Complex a, Complex b, Complex x) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(x))
        throw std::domain_error("kummer_m: non-finite argument");
    return to_complex(kummer_f128(a, b, x));
}

Complex pcf_d(Complex nu, Complex z) {
    if (!is_finite(nu) || !is_finite(z))
        throw std::domain_error("pcf_d: non-finite argument");
    if (z.real() >= 0.0) return pcf_d_right(nu, z);
    // Reflection into the right half-plane; both inner arguments land there.
    const Complex rg = rgamma_c(-nu);
    if (z.imag() >= 0.0) {
        return std::exp(kI*kPi*nu)*pcf_d_right(nu, -z) +
               kSqrt2Pi*rg*std::exp(0.5*kI*kPi*(nu + 1.0))*pcf_d_right(-nu - 1.0, -kI*z);
    }
    return std::exp(-kI*kPi*nu)*pcf_d_right(nu, -z) +
           kSqrt2Pi*rg*std::exp(-0.5*kI*kPi*(nu + 1.0))*pcf_d_right(-nu - 1.0, kI*z);
}

}  // namespace tdwell
