#include "tdwell/grid.hpp"

#include <cmath>

#include "tdwell/tridiag.hpp"

namespace tdwell {

WaveFunction WaveFunction::from_function(const Grid1D& g,
                                         const std::function<Complex(double)>& f,
                                         double time) {
    g.validate();
    WaveFunction wf(g, time);
    for (int i = 0; i < g.n; ++i) wf.amps(i) = f(g.x(i));
    if (!wf.amps.allFinite())
        throw std::domain_error("WaveFunction: non-finite amplitude");
    return wf;
}

double WaveFunction::norm2() const {
    return detail::origin_corrected_integral(
               grid, [this](long i) { return Complex{std::norm(amps(i)), 0.0}; })
        .real();
}

double WaveFunction::norm() const { return std::sqrt(norm2()); }

void WaveFunction::normalize() {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::domain_error("WaveFunction: cannot normalize zero/non-finite state");
    amps /= n;
}

Complex WaveFunction::overlap(const WaveFunction& other) const {
    if (!(grid == other.grid))
        throw GridMismatchError("WaveFunction::overlap: grids differ");
    return detail::origin_corrected_integral(grid, [&](long i) {
        return std::conj(amps(i))*other.amps(i);
    });
}

double WaveFunction::second_moment() const {
    double s = 0.0;
    for (int i = 0; i < grid.n; ++i) s += grid.x(i)*grid.x(i)*std::norm(amps(i));
    return s*grid.dx()/norm2();
}

double WaveFunction::mean_position() const {
    double s = 0.0;
    for (int i = 0; i < grid.n; ++i) s += grid.x(i)*std::norm(amps(i));
    return s*grid.dx()/norm2();
}

double WaveFunction::central_second_moment() const {
    const double mu = mean_position();
    double s = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double d = grid.x(i) - mu;
        s += d*d*std::norm(amps(i));
    }
    return s*grid.dx()/norm2();
}

SplineInterpolant::SplineInterpolant(const WaveFunction& wf)
    : x0_(wf.grid.x(0)), dx_(wf.grid.dx()), y_(wf.amps) {
    const int n = wf.grid.n;
    m_ = Eigen::VectorXcd::Zero(n);
    if (n < 3) return;
    // natural spline: interior second derivatives from the (1 4 1) system
    const int k = n - 2;
    Eigen::VectorXcd dl = Eigen::VectorXcd::Constant(k - 1, 1.0);
    Eigen::VectorXcd d = Eigen::VectorXcd::Constant(k, 4.0);
    Eigen::VectorXcd du = Eigen::VectorXcd::Constant(k - 1, 1.0);
    Eigen::VectorXcd rhs(k);
    for (int i = 0; i < k; ++i)
        rhs(i) = 6.0*(y_(i) - 2.0*y_(i + 1) + y_(i + 2))/(dx_*dx_);
    detail::thomas_solve(dl, d, du, rhs);
    m_.segment(1, k) = rhs;
}

Complex SplineInterpolant::operator()(double x) const {
    const int n = static_cast<int>(y_.size());
    const double s = (x - x0_)/dx_;
    if (s <= 0.0 || s >= n - 1) return {0.0, 0.0};
    int j = static_cast<int>(s);
    if (j > n - 2) j = n - 2;
    const double b = s - j, a = 1.0 - b;
    return a*y_(j) + b*y_(j + 1) +
           ((a*a*a - a)*m_(j) + (b*b*b - b)*m_(j + 1))*(dx_*dx_/6.0);
}

}  // namespace tdwell
