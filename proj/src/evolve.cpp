#include "tdwell/evolve.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace tdwell {

namespace {

int worker_count(int points) {
    const unsigned hw = std::thread::hardware_concurrency();
    const int n = static_cast<int>(hw == 0 ? 1 : hw);
    return std::max(1, std::min(n, points/16 + 1));
}

WaveFunction evolve_impl(const KernelFn& kernel,
                         const std::function<Complex(double)>& psi0,
                         const std::vector<double>& pts, double t,
                         const Grid1D& out_grid, const QuadratureConfig& cfg) {
    if (!(t > 0.0)) throw std::domain_error("evolve_state: requires t > 0");
    out_grid.validate();
    WaveFunction out(out_grid, t);
    std::atomic<int> failures{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;

    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const double x = out_grid.x(i);
            auto f = [&](double xp) { return kernel(x, t, xp)*psi0(xp); };
            try {
                out.amps(i) = integrate_segments(f, pts, cfg).value;
            } catch (const QuadratureError& e) {
                out.amps(i) = e.best;
                failures.fetch_add(1, std::memory_order_relaxed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const int nw = worker_count(out_grid.n);
    if (nw == 1) {
        work(0, out_grid.n);
    } else {
        std::vector<std::thread> threads;
        const int chunk = (out_grid.n + nw - 1)/nw;
        for (int w = 0; w < nw; ++w) {
            const int b = w*chunk, e = std::min(out_grid.n, (w + 1)*chunk);
            if (b < e) threads.emplace_back(work, b, e);
        }
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    if (failures.load() > out_grid.n/100) {
        throw QuadratureError("evolve_state: more than 1% of points failed tolerance",
                              Complex{0, 0}, 0.0);
    }
    return out;
}

}  // namespace

WaveFunction evolve_state(const KernelFn& kernel, const WaveFunction& psi0,
                          double t, const Grid1D& out_grid,
                          const QuadratureConfig& cfg) {
    if (std::abs(psi0.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("evolve_state: psi0 must be normalized within 1e-6");
    SplineInterpolant interp(psi0);
    auto f = [interp](double x) { return interp(x); };
    return evolve_impl(kernel, f, {psi0.grid.x_min, psi0.grid.x_max}, t, out_grid, cfg);
}

WaveFunction evolve_state(const PropagatorHandle& kernel, const WaveFunction& psi0,
                          double t, const Grid1D& out_grid,
                          const QuadratureConfig& cfg) {
    return evolve_state(KernelFn(kernel), psi0, t, out_grid, cfg);
}

WaveFunction evolve_state(const KernelFn& kernel,
                          const std::function<Complex(double)>& psi0,
                          const std::vector<double>& breakpoints, double t,
                          const Grid1D& out_grid, const QuadratureConfig& cfg) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("evolve_state: need at least two breakpoints");
    return evolve_impl(kernel, psi0, breakpoints, t, out_grid, cfg);
}

WaveFunction evolve_state(const PropagatorHandle& kernel,
                          const std::function<Complex(double)>& psi0,
                          const std::vector<double>& breakpoints, double t,
                          const Grid1D& out_grid, const QuadratureConfig& cfg) {
    return evolve_state(KernelFn(kernel), psi0, breakpoints, t, out_grid, cfg);
}

double survival(const WaveFunction& psi0, const WaveFunction& psit) {
    return std::norm(psi0.overlap(psit));
}

}  // namespace tdwell
