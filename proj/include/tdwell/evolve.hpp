#pragma once

#include <functional>
#include <vector>

#include "tdwell/grid.hpp"
#include "tdwell/physical.hpp"
#include "tdwell/quadrature.hpp"

namespace tdwell {

/// psi(x,t) = integral dx' K(x,t|x',0) psi0(x') per output-grid point.
/// psi0 must be normalized within 1e-6. Per-point quadrature failures are
/// collected and tolerated up to 1% of points (the best estimate is kept);
/// beyond that the first failure is rethrown.
/// Parallelizes over output points; results are independent of the thread
/// count or evaluation order.
WaveFunction evolve_state(const KernelFn& kernel, const WaveFunction& psi0,
                          double t, const Grid1D& out_grid,
                          const QuadratureConfig& cfg = {});
WaveFunction evolve_state(const PropagatorHandle& kernel, const WaveFunction& psi0,
                          double t, const Grid1D& out_grid,
                          const QuadratureConfig& cfg = {});

/// Same contract with an analytic initial state. `breakpoints` lists the
/// integration endpoints plus interior kinks (e.g. {-L, 0, L} for the
/// delta-well bound state), so adaptive panels never straddle a kink.
WaveFunction evolve_state(const KernelFn& kernel,
                          const std::function<Complex(double)>& psi0,
                          const std::vector<double>& breakpoints, double t,
                          const Grid1D& out_grid, const QuadratureConfig& cfg = {});
WaveFunction evolve_state(const PropagatorHandle& kernel,
                          const std::function<Complex(double)>& psi0,
                          const std::vector<double>& breakpoints, double t,
                          const Grid1D& out_grid, const QuadratureConfig& cfg = {});

/// Survival probability |integral dx psi0^*(x) psit(x)|^2 on the common grid:
/// trapezoid-class midpoint sum with an Euler-Maclaurin derivative-jump
/// correction at the origin (where the delta-well states are kinked).
/// Throws GridMismatchError if the grids differ.
double survival(const WaveFunction& psi0, const WaveFunction& psit);

}  // namespace tdwell
