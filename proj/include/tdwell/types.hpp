#pragma once

#include <cmath>
#include <complex>

namespace tdwell {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338328;

// exp(-i*pi/4) = (1-i)/sqrt(2), the branch used throughout for sqrt(1/i).
inline const Complex kExpMinusIPiQuarter{std::sqrt(0.5), -std::sqrt(0.5)};
inline const Complex kExpPlusIPiQuarter{std::sqrt(0.5), std::sqrt(0.5)};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace tdwell
