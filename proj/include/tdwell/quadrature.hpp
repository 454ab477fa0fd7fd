#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "tdwell/errors.hpp"
#include "tdwell/types.hpp"

namespace tdwell {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 50;
    // Integrand-magnitude threshold for tail truncation, relative to the
    // largest magnitude sampled so far. Panels below it are not refined.
    double envelope_cutoff = 1e-14;
    long max_panels = 400000;
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double err_est = 0.0;
    long evals = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (positive half; QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelEval {
    Complex k15;
    double err;
    double fmax;  // max |f| over the 15 samples
};

template <typename G>
PanelEval k15_panel(G&& g, double a, double b) {
    const double c = 0.5*(a + b), h = 0.5*(b - a);
    Complex fc = g(c);
    if (!is_finite(fc)) throw std::domain_error("integrand returned non-finite value");
    Complex resk = kWgk[7]*fc;
    Complex resg = kWg[3]*fc;
    double resabs = kWgk[7]*std::abs(fc);
    double fmax = std::abs(fc);
    Complex fv[7][2];
    for (int j = 0; j < 7; ++j) {
        const double dx = h*kXgk[j];
        fv[j][0] = g(c - dx);
        fv[j][1] = g(c + dx);
        if (!is_finite(fv[j][0]) || !is_finite(fv[j][1]))
            throw std::domain_error("integrand returned non-finite value");
        const Complex sum = fv[j][0] + fv[j][1];
        resk += kWgk[j]*sum;
        if (j % 2 == 1) resg += kWg[j/2]*sum;
        resabs += kWgk[j]*(std::abs(fv[j][0]) + std::abs(fv[j][1]));
        fmax = std::max({fmax, std::abs(fv[j][0]), std::abs(fv[j][1])});
    }
    const Complex mean = resk*0.5;
    double resasc = kWgk[7]*std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j]*(std::abs(fv[j][0] - mean) + std::abs(fv[j][1] - mean));
    resasc *= h;
    resabs *= h;
    double err = std::abs(resk - resg)*h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc*std::min(1.0, std::pow(200.0*err/resasc, 1.5));
    const double round_floor = 50.0*std::numeric_limits<double>::epsilon()*resabs;
    err = std::max(err, round_floor);
    return {resk*h, err, fmax};
}

struct Panel {
    double a, b;
    Complex val;
    double err;
    double fmax;
    int depth;
    long serial;
};

struct PanelLess {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.serial > q.serial;  // deterministic tie-break
    }
};

// Adaptive G7-K15 on a finite interval in the (possibly mapped) variable.
template <typename G>
QuadResult adapt(G&& g, double a, double b, const QuadratureConfig& cfg) {
    QuadResult res;
    long evals = 0;
    long serial = 0;
    auto eval_panel = [&](double pa, double pb, int depth) {
        PanelEval pe = k15_panel(g, pa, pb);
        evals += 15;
        return Panel{pa, pb, pe.k15, pe.err, pe.fmax, depth, serial++};
    };
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    constexpr int kInit = 8;
    Complex total{0.0, 0.0};
    double total_err = 0.0;
    double peak = 0.0;
    for (int i = 0; i < kInit; ++i) {
        Panel p = eval_panel(a + (b - a)*i/kInit, a + (b - a)*(i + 1)/kInit, 0);
        peak = std::max(peak, p.fmax);
        total += p.val;
        total_err += p.err;
        heap.push(p);
    }
    std::vector<Panel> frozen;  // below-cutoff or max-depth panels
    long n_panels = kInit;
    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol*std::abs(total));
        if (total_err <= target) break;
        if (heap.empty() || n_panels > cfg.max_panels) {
            throw QuadratureError("quadrature tolerance not met", total, total_err);
        }
        Panel worst = heap.top();
        heap.pop();
        if (worst.fmax < cfg.envelope_cutoff*peak || worst.depth >= cfg.max_depth) {
            frozen.push_back(worst);
            // Its error stays counted; if all panels freeze before the target
            // is met the loop throws above once the heap drains.
            continue;
        }
        const double mid = 0.5*(worst.a + worst.b);
        Panel left = eval_panel(worst.a, mid, worst.depth + 1);
        Panel right = eval_panel(mid, worst.b, worst.depth + 1);
        n_panels += 2;
        peak = std::max({peak, left.fmax, right.fmax});
        total += left.val + right.val - worst.val;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    res.value = total;
    res.err_est = total_err;
    res.evals = evals;
    return res;
}

// Non-decaying oscillatory tails (Fresnel-type integrands) defeat panel
// refinement; as a fallback the integral is damped with e^{-eps x^2} and
// Richardson-extrapolated to eps -> 0 (values analytic in eps).
template <typename G>
QuadResult damped_tail_limit(G&& g, double ua, double ub, const QuadratureConfig& cfg,
                             const std::function<double(double)>& x_of_u) {
    constexpr int kLevels = 8;
    const double eps0 = 0.05;
    QuadratureConfig inner = cfg;
    inner.abs_tol = std::min(cfg.abs_tol, 1e-12);
    inner.rel_tol = std::min(cfg.rel_tol, 1e-11);
    std::array<Complex, kLevels> row{}, prev{};
    QuadResult out;
    double inner_err = 0.0;
    for (int j = 0; j < kLevels; ++j) {
        const double eps = eps0/std::pow(2.0, j);
        auto gd = [&](double u) -> Complex {
            const double x = x_of_u(u);
            const double damp = std::exp(-eps*x*x);
            if (damp == 0.0 || !std::isfinite(x)) return {0.0, 0.0};
            return g(u)*damp;
        };
        const QuadResult r = detail::adapt(gd, ua, ub, inner);
        out.evals += r.evals;
        inner_err = std::max(inner_err, r.err_est);
        prev = row;
        row[0] = r.value;
        for (int k = 1; k <= j; ++k) {
            const double w = std::pow(2.0, k);
            row[k] = (w*row[k - 1] - prev[k - 1])/(w - 1.0);
        }
    }
    out.value = row[kLevels - 1];
    out.err_est = std::abs(row[kLevels - 1] - row[kLevels - 2]) + 10.0*inner_err;
    if (out.err_est > std::max(cfg.abs_tol, cfg.rel_tol*std::abs(out.value)))
        throw QuadratureError("quadrature tolerance not met (oscillatory tail)",
                              out.value, out.err_est);
    return out;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7-15) quadrature of a complex-valued integrand on
/// (a, b); either endpoint may be +-infinity (rational tail substitution,
/// with a damped-extrapolation fallback for non-decaying oscillatory tails).
/// Throws QuadratureError (carrying the best estimate) if the tolerance
/// cannot be met within cfg.max_depth / cfg.max_panels.
template <typename F>
QuadResult integrate_line(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    const bool ainf = std::isinf(a), binf = std::isinf(b);
    if (!ainf && !binf) {
        return detail::adapt([&](double x) { return f(x); }, a, b, cfg);
    }
    if (ainf && binf) {
        // x = u/(1-u^2), u in (-1,1)
        auto xu = [](double u) { return u/(1.0 - u*u); };
        auto g = [&](double u) -> Complex {
            const double d = 1.0 - u*u;
            const double x = u/d;
            const double jac = (1.0 + u*u)/(d*d);
            if (d <= 0.0 || !std::isfinite(x) || !std::isfinite(jac)) return {0.0, 0.0};
            return f(x)*jac;
        };
        try {
            return detail::adapt(g, -1.0, 1.0, cfg);
        } catch (const QuadratureError&) {
            return detail::damped_tail_limit(g, -1.0, 1.0, cfg, xu);
        }
    }
    if (binf) {
        // x = a + u/(1-u), u in (0,1)
        auto xu = [a](double u) { return a + u/(1.0 - u); };
        auto g = [&](double u) -> Complex {
            const double d = 1.0 - u;
            const double x = a + u/d;
            const double jac = 1.0/(d*d);
            if (d <= 0.0 || !std::isfinite(x) || !std::isfinite(jac)) return {0.0, 0.0};
            return f(x)*jac;
        };
        try {
            return detail::adapt(g, 0.0, 1.0, cfg);
        } catch (const QuadratureError&) {
            return detail::damped_tail_limit(g, 0.0, 1.0, cfg, xu);
        }
    }
    // x = b - u/(1-u), u in (0,1); orientation preserved for (-inf, b)
    auto xu = [b](double u) { return b - u/(1.0 - u); };
    auto g = [&](double u) -> Complex {
        const double d = 1.0 - u;
        const double x = b - u/d;
        const double jac = 1.0/(d*d);
        if (d <= 0.0 || !std::isfinite(x) || !std::isfinite(jac)) return {0.0, 0.0};
        return f(x)*jac;
    };
    try {
        return detail::adapt(g, 0.0, 1.0, cfg);
    } catch (const QuadratureError&) {
        return detail::damped_tail_limit(g, 0.0, 1.0, cfg, xu);
    }
}

/// Quadrature over consecutive segments [p0,p1], [p1,p2], ... so that known
/// kinks (|x| factors, delta supports) land on panel boundaries. First and
/// last breakpoints may be infinite.
template <typename F>
QuadResult integrate_segments(F&& f, const std::vector<double>& pts,
                              const QuadratureConfig& cfg = {}) {
    if (pts.size() < 2) throw std::invalid_argument("need at least two breakpoints");
    QuadResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        QuadResult r = integrate_line(f, pts[i], pts[i + 1], cfg);
        total.value += r.value;
        total.err_est += r.err_est;
        total.evals += r.evals;
    }
    return total;
}

}  // namespace tdwell
