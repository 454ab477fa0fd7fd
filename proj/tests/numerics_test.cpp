#include <doctest.h>

#include <cmath>
#include <random>

#include "tdwell/errors.hpp"
#include "tdwell/evolve.hpp"
#include "tdwell/grid.hpp"
#include "tdwell/propagators.hpp"
#include "tdwell/quadrature.hpp"
#include "tdwell/special_functions.hpp"

using namespace tdwell;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
const Complex I{0.0, 1.0};
}

TEST_CASE("integrate_line: Gaussian and Fresnel closed forms") {
    auto gauss = [](double x) { return Complex{std::exp(-x*x), 0.0}; };
    const QuadResult g = integrate_line(gauss, -kInf, kInf);
    CHECK(std::abs(g.value - std::sqrt(kPi)) < 1e-12);

    auto fresnel = [](double x) { return std::exp(I*x*x); };
    const QuadResult fr = integrate_line(fresnel, -kInf, kInf);
    CHECK(std::abs(fr.value - std::sqrt(kPi)*kExpPlusIPiQuarter) < 1e-8);
}

TEST_CASE("integrate_line: reproduces the Moshinsky integral definition") {
    // integral over (-inf, 0] of the free kernel times e^{ikx'}, k real
    const double x = 1.0, t = 2.0;
    const Complex k{0.5, 0.0};
    auto f = [&](double xp) {
        return std::exp(I*(k*xp + (x - xp)*(x - xp)/(2.0*t)))/std::sqrt(2.0*kPi*t)*
               kExpMinusIPiQuarter;
    };
    const QuadResult r = integrate_line(f, -kInf, 0.0);
    CHECK(std::abs(r.value - moshinsky(x, k, t)) < 1e-8);
}

TEST_CASE("integrate_line: error estimates are honest on a smooth battery") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> ua(0.3, 2.5), uc(-2.0, 2.0), uk(0.0, 3.0);
    int honest = 0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
        // a e^{-b(x-c)^2} cos(k x): closed form via the shifted Gaussian
        const double a = ua(rng), b = ua(rng), c = uc(rng), k = uk(rng);
        auto f = [&](double x) {
            return Complex{a*std::exp(-b*(x - c)*(x - c))*std::cos(k*x), 0.0};
        };
        // int a e^{-b u^2} cos(k(u+c)) du = a sqrt(pi/b) e^{-k^2/4b} cos(k c)
        const double exact = a*std::sqrt(kPi/b)*std::exp(-0.25*k*k/b)*std::cos(k*c);
        const QuadResult r = integrate_line(f, -kInf, kInf);
        const double true_err = std::abs(r.value - exact);
        if (true_err <= 10.0*std::max(r.err_est, 1e-16)) ++honest;
    }
    CHECK(honest >= 99);
}

TEST_CASE("integrate_line: envelope truncation handles decaying oscillation") {
    // e^{-|x|} e^{i 40 x}: exact 2/(1+1600)
    auto f = [](double x) { return std::exp(-std::abs(x) + I*40.0*x); };
    const QuadResult r = integrate_segments(f, {-kInf, 0.0, kInf});
    CHECK(std::abs(r.value - 2.0/1601.0) < 1e-10);
}

TEST_CASE("integrate_line: non-finite integrand raises") {
    auto f = [](double x) {
        return x > 1.0 ? Complex{std::nan(""), 0.0} : Complex{1.0, 0.0};
    };
    CHECK_THROWS_AS(integrate_line(f, 0.0, 2.0), std::domain_error);
}

TEST_CASE("grid: midpoint convention invariants") {
    const Grid1D g(-20.0, 20.0, 128);
    CHECK(g.dx()*g.n == doctest::Approx(40.0).epsilon(1e-14));
    CHECK(g.x(0) == doctest::Approx(-20.0 + 0.5*g.dx()));
    CHECK(g.x(g.n - 1) == doctest::Approx(20.0 - 0.5*g.dx()));
    CHECK_THROWS_AS(Grid1D(1.0, -1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(-1.0, 1.0, 8), std::invalid_argument);
}

TEST_CASE("evolve_state: free Gaussian matches the spreading closed form") {
    const PhysicalParams p{1.0, 1.0, 0.0, 0.0};
    const Grid1D grid(-16.0, 16.0, 512);
    // psi0 = pi^{-1/4} e^{-x^2/2}; psi(x,t) = pi^{-1/4}(1+it)^{-1/2} e^{-x^2/(2(1+it))}
    auto psi0 = [](double x) {
        return Complex{std::pow(kPi, -0.25)*std::exp(-0.5*x*x), 0.0};
    };
    WaveFunction wf0 = WaveFunction::from_function(grid, psi0);
    wf0.normalize();
    const double t = 1.7;
    const KernelFn kern = [&p](double x, double tt, double xp) {
        return k_free(p, x, tt, xp);
    };

    auto exact = [&](double x) {
        const Complex z = 1.0 + I*t;
        return std::pow(kPi, -0.25)/std::sqrt(z)*std::exp(-0.5*x*x/z);
    };

    SUBCASE("analytic initial state") {
        const WaveFunction out = evolve_state(kern, psi0, {-16.0, 16.0}, t, grid);
        double l2 = 0.0;
        for (int i = 0; i < grid.n; ++i) l2 += std::norm(out.amps(i) - exact(grid.x(i)));
        CHECK(std::sqrt(l2*grid.dx()) < 1e-8);
        // textbook width sqrt(1+t^2) in these units: variance (1+t^2)/2
        CHECK(out.central_second_moment() ==
              doctest::Approx(0.5*(1.0 + t*t)).epsilon(1e-6));
    }
    SUBCASE("grid-sampled initial state (spline path)") {
        const Grid1D fine(-16.0, 16.0, 1024);
        WaveFunction wf_fine = WaveFunction::from_function(fine, psi0);
        wf_fine.normalize();
        const WaveFunction out = evolve_state(kern, wf_fine, t, fine);
        double l2 = 0.0;
        for (int i = 0; i < fine.n; ++i) l2 += std::norm(out.amps(i) - exact(fine.x(i)));
        CHECK(std::sqrt(l2*fine.dx()) < 1e-8);
    }
    SUBCASE("unnormalized input rejected") {
        WaveFunction bad = wf0;
        bad.amps *= 1.01;
        CHECK_THROWS_AS(evolve_state(kern, bad, t, grid), std::invalid_argument);
    }
}

TEST_CASE("survival: identity, parity orthogonality, frozen free-decay values") {
    const Grid1D grid(-24.0, 24.0, 1024);
    const PhysicalParams p{1.0, 1.0, 0.0, 1.0};
    WaveFunction psi0 = WaveFunction::from_function(
        grid, [&](double x) { return Complex{psi_delta(p, x), 0.0}; });
    psi0.normalize();
    CHECK(survival(psi0, psi0) == doctest::Approx(1.0).epsilon(1e-12));

    WaveFunction odd = WaveFunction::from_function(
        grid, [](double x) { return Complex{x*std::exp(-x*x), 0.0}; });
    odd.normalize();
    CHECK(survival(psi0, odd) < 1e-12);

    WaveFunction other(Grid1D(-24.0, 24.0, 512));
    CHECK_THROWS_AS(survival(psi0, other), GridMismatchError);

    // free evolution of the delta bound state; frozen oracle values
    const KernelFn kern = [&p](double x, double t, double xp) {
        return k_free(p, x, t, xp);
    };
    auto psi_fn = [&p](double x) { return Complex{psi_delta(p, x), 0.0}; };
    struct Row { double t, want; };
    const Row rows[] = {
        {0.25, 0.95121899040926699}, {1.0, 0.79122533525472309}, {4.0, 0.44958856049991219},
    };
    for (const auto& r : rows) {
        const WaveFunction psit =
            evolve_state(kern, psi_fn, {-40.0, 0.0, 40.0}, r.t, grid);
        CHECK(survival(psi0, psit) == doctest::Approx(r.want).epsilon(1e-6));
    }
}

TEST_CASE("survival: grid-refinement convergence at Fig. 2 settings") {
    const PhysicalParams p{1.0, 1.0, 1.0, 1.0};
    auto psi_fn = [&p](double x) { return Complex{psi_delta(p, x), 0.0}; };
    const KernelFn kern = [&p](double x, double t, double xp) {
        return k_td_full(p, x, t, xp);
    };
    const double t = 1.0;
    double vals[2];
    int idx = 0;
    for (int n : {960, 1920}) {
        const Grid1D grid(-24.0, 24.0, n);
        WaveFunction psi0 = WaveFunction::from_function(grid, psi_fn);
        psi0.normalize();
        const WaveFunction psit = evolve_state(kern, psi_fn, {-40.0, 0.0, 40.0}, t, grid);
        vals[idx++] = survival(psi0, psit);
    }
    CHECK(std::abs(vals[0] - vals[1]) < 1e-6);
}
