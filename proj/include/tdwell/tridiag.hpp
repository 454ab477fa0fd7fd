#pragma once

#include <Eigen/Dense>

namespace tdwell::detail {

/// Thomas algorithm for a complex tridiagonal system. dl/du are the sub- and
/// super-diagonals (length n-1), d the diagonal (length n). Overwrites rhs
/// with the solution. No pivoting; callers supply diagonally dominant
/// systems (Crank-Nicolson, cubic spline).
inline void thomas_solve(const Eigen::VectorXcd& dl, Eigen::VectorXcd& d,
                         const Eigen::VectorXcd& du, Eigen::VectorXcd& rhs) {
    const auto n = d.size();
    for (Eigen::Index i = 1; i < n; ++i) {
        const std::complex<double> w = dl(i - 1)/d(i - 1);
        d(i) -= w*du(i - 1);
        rhs(i) -= w*rhs(i - 1);
    }
    rhs(n - 1) /= d(n - 1);
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        rhs(i) = (rhs(i) - du(i)*rhs(i + 1))/d(i);
    }
}

}  // namespace tdwell::detail
