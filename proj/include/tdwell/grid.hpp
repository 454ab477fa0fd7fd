#pragma once

#include <Eigen/Dense>
#include <functional>

#include "tdwell/errors.hpp"
#include "tdwell/types.hpp"

namespace tdwell {

namespace detail {
/// Midpoint-rule integral dx*sum f(i) with an Euler-Maclaurin correction for
/// a derivative jump of the integrand at the origin (the delta well sits
/// there and its bound state is kinked). The correction term vanishes to
/// stencil accuracy for smooth integrands.
template <typename G, typename F>
std::complex<double> origin_corrected_integral(const G& g, F&& f) {
    std::complex<double> sum{0.0, 0.0};
    for (int i = 0; i < g.n; ++i) sum += f(i);
    std::complex<double> a = g.dx()*sum;
    const double s = -g.x_min/g.dx();
    const long i0 = std::lround(s);
    if (std::abs(s - static_cast<double>(i0)) < 1e-9 && i0 >= 4 && i0 + 4 <= g.n) {
        constexpr double c0 = -71.0/24.0, c1 = 47.0/8.0, c2 = -31.0/8.0, c3 = 23.0/24.0;
        const std::complex<double> dplus =
            (c0*f(i0) + c1*f(i0 + 1) + c2*f(i0 + 2) + c3*f(i0 + 3))/g.dx();
        const std::complex<double> dminus =
            -(c0*f(i0 - 1) + c1*f(i0 - 2) + c2*f(i0 - 3) + c3*f(i0 - 4))/g.dx();
        a -= g.dx()*g.dx()/24.0*(dplus - dminus);
    }
    return a;
}
}  // namespace detail

/// Uniform 1D grid, midpoint convention: n cells of width dx covering
/// [x_min, x_max] with sample points x_i = x_min + (i + 1/2) dx, so that
/// n * dx == x_max - x_min and the samples never sit on cell boundaries
/// (the delta-well kink at x = 0 falls between nodes on symmetric grids).
struct Grid1D {
    double x_min = -1.0;
    double x_max = 1.0;
    int n = 16;

    Grid1D() = default;
    Grid1D(double a, double b, int count) : x_min(a), x_max(b), n(count) { validate(); }

    void validate() const {
        if (!(x_min < x_max)) throw std::invalid_argument("Grid1D: x_min < x_max required");
        if (n < 16) throw std::invalid_argument("Grid1D: n >= 16 required");
    }
    double dx() const { return (x_max - x_min)/n; }
    double x(int i) const { return x_min + (i + 0.5)*dx(); }
    bool operator==(const Grid1D& o) const {
        return x_min == o.x_min && x_max == o.x_max && n == o.n;
    }
};

/// Complex amplitudes sampled on a Grid1D, with a time stamp.
struct WaveFunction {
    Grid1D grid;
    Eigen::VectorXcd amps;
    double t = 0.0;

    WaveFunction() = default;
    WaveFunction(const Grid1D& g, double time = 0.0)
        : grid(g), amps(Eigen::VectorXcd::Zero(g.n)), t(time) {}

    static WaveFunction from_function(const Grid1D& g,
                                      const std::function<Complex(double)>& f,
                                      double time = 0.0);

    double norm2() const;                       // integral of |psi|^2 (midpoint rule)
    double norm() const;
    void normalize();
    Complex overlap(const WaveFunction& other) const;  // integral psi^* other
    double second_moment() const;               // integral x^2 |psi|^2 / norm2
    double mean_position() const;
    double central_second_moment() const;       // variance about the mean
};

/// Natural cubic spline through the samples; evaluates to zero outside the
/// grid. Built once, evaluated from any thread.
class SplineInterpolant {
public:
    explicit SplineInterpolant(const WaveFunction& wf);
    Complex operator()(double x) const;

private:
    double x0_, dx_;
    Eigen::VectorXcd y_, m_;  // values and second derivatives at nodes
};

}  // namespace tdwell
