#pragma once

#include <functional>
#include <vector>

#include "tdwell/physical.hpp"
#include "tdwell/types.hpp"

namespace tdwell {

/// Time profile of the scaling transformation
///   V(x,t) = V(x/C + A)/C^2 + g1 x + g2 x^2 + g0,
/// with analytic derivatives supplied by the caller (the residual check must
/// distinguish model error from finite-difference error).
struct ScalingProfile {
    std::function<double(double)> C, Cdot, Cddot;
    std::function<double(double)> A, Adot, Addot;
    std::function<double(double)> g0, g1, g2;
    double k_const = 0.0;

    // Closed-form t~ applies for the exponential profile; otherwise t~ is
    // integrated numerically.
    bool is_exponential = false;
    double omega = 0.0;

    static ScalingProfile exponential(double omega, double m = 1.0);
    static ScalingProfile identity();

    /// t~(t) = integral_0^t ds / C(s)^2; monotone, and bounded by 1/(2 omega)
    /// for the exponential profile.
    double t_tilde(double t) const;

    /// Profiles with A != 0 or g1 != 0 pass the residual check but cannot
    /// back mapped kernels in this version.
    bool kernel_instantiable(double t) const;
};

struct MappedCoords {
    double x_tilde;
    double x_tilde_prime;
    double t_tilde;
    Complex prefactor;  // (C(t) C(0))^{-1/2}, real positive for admissible C
};

/// Residuals of the two profile ODEs at each sample time, max-normalized per
/// sample: max(|Cdd + 2 g2 C/m - K/C^3|, |Add + 2 Ad Cd/C + K A/C^4 - g1/(m C)|).
/// (The sign of the g2 term follows the paper's explicit solution
/// C = e^{w t}, g2 = -m w^2/2, which the printed ODE contradicts; evaluated
/// under the m = 1 reading for atomic-unit profiles.)
std::vector<double> ode_residuals(const ScalingProfile& prof, const PhysicalParams& p,
                                  const std::vector<double>& t_samples);

MappedCoords transform_coords(const ScalingProfile& prof, double x, double xp, double t);

/// Eq. for the mapped kernel:
///   K(x,t|x',0) = (C(t)C(0))^{-1/2}
///                 exp[(i m/2 hbar)(x^2 Cdot(t)/C(t) - x'^2 Cdot(0)/C(0))]
///                 K~(x~, t~ | x~', 0)
/// with K~ one of the static kernels (Free, StaticDeltaFree, CoshWell).
Complex mapped_kernel(const ScalingProfile& prof, const PropagatorHandle& base,
                      const PhysicalParams& p, double x, double t, double xp);

}  // namespace tdwell
