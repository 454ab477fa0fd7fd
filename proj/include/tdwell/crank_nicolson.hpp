#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tdwell/grid.hpp"

namespace tdwell {

/// Regularized delta term: strength(t) * exp(-(x-center)^2/(2 sigma^2)) /
/// (sigma sqrt(2 pi)). Attractive wells carry negative strength.
struct DeltaTerm {
    std::function<double(double)> strength;  // t -> energy*length (signed)
    double center = 0.0;
    double sigma = 0.05;
};

/// Potential for the grid solver: smooth part V(x,t) plus regularized delta
/// terms. m and hbar default to atomic units (scenarios run dimensionless
/// internally and convert at I/O).
struct PotentialSpec {
    std::function<double(double, double)> v;  // may be empty (V = 0)
    std::vector<DeltaTerm> delta_terms;
    double m = 1.0;
    double hbar = 1.0;

    double operator()(double x, double t) const;
    void validate() const;
};

/// Complex absorbing boundary layer: -i * strength * (d/width)^power inside
/// the outer width_fraction of the grid on both sides. strength = 0 disables.
struct CapSpec {
    double width_fraction = 0.15;
    double strength = 0.0;
    int power = 3;

    void validate() const;
};

/// Crank-Nicolson step to t_final with midpoint-time potential sampling.
/// Without a CAP and with real V, throws InstabilityError if the norm grows
/// by more than 1e-3 in a single step.
WaveFunction cn_evolve(const PotentialSpec& pot, const CapSpec& cap,
                       const WaveFunction& psi0, double t_final, double dt);

/// Same propagation, invoking `observer` exactly at each time in
/// `sample_times` (strictly increasing, starting at psi0.t or later; the
/// step size is adjusted per segment to land on the samples).
void cn_evolve_observed(const PotentialSpec& pot, const CapSpec& cap,
                        const WaveFunction& psi0, const std::vector<double>& sample_times,
                        double dt,
                        const std::function<void(const WaveFunction&)>& observer);

/// Imaginary-time relaxation to the lowest state; returns the normalized
/// state and its Rayleigh-quotient energy (converged when the energy drift
/// per step falls below 1e-10 of the kinetic scale). Throws
/// NoBoundStateError if the relaxed state is not localized on the grid.
std::pair<WaveFunction, double> cn_ground_state(const PotentialSpec& pot,
                                                const WaveFunction& psi_seed,
                                                double tau);

/// Picks the CAP strength minimizing the reflected norm of a free Gaussian
/// probe with momentum k0 on the given grid (coarse deterministic scan).
double tune_cap_strength(const Grid1D& grid, const PotentialSpec& pot, CapSpec cap,
                         double k0);

}  // namespace tdwell
