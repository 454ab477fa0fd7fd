#include "tdwell/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "tdwell/mapping.hpp"
#include "tdwell/propagators.hpp"
#include "tdwell/quadrature.hpp"
#include "tdwell/scenarios.hpp"
#include "tdwell/special_functions.hpp"
#include "tdwell/spectral.hpp"

namespace tdwell {

namespace {

struct Group {
    std::string name;
    std::ostringstream fail;
    bool ok = true;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (fail.tellp() == 0) fail << what;
        }
    }
    void check_close(Complex got, Complex want, double tol, const std::string& what) {
        check(std::abs(got - want) <= tol*std::max(1.0, std::abs(want)),
              what + " off by " + std::to_string(std::abs(got - want)));
    }
};

void specfun_group(Group& g) {
    g.check_close(gamma_c({1.0, 0.0}), {1.0, 0.0}, 1e-13, "gamma(1)");
    g.check_close(gamma_c({0.5, 0.0}), {std::sqrt(kPi), 0.0}, 1e-13, "gamma(1/2)");
    g.check_close(gamma_c({1.0, 1.0}),
                  {0.49801566811835604, -0.15494982830181069}, 1e-12, "gamma(1+i)");
    g.check_close(faddeeva_w({0.0, 0.0}), {1.0, 0.0}, 1e-14, "w(0)");
    g.check_close(erfc_c({1.0, 0.0}), {0.15729920705028513, 0.0}, 1e-12, "erfc(1)");
    g.check_close(moshinsky(1.0, {0.0, -0.5}, 2.0),
                  {0.25344645623797054, 0.06471550506246669}, 1e-12, "M(1,-i/2,2)");
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-4.0, 4.0), uk(-3.0, 3.0), ut(0.05, 8.0);
    for (int i = 0; i < 300; ++i) {
        const double x = ux(rng), t = ut(rng);
        const Complex k{uk(rng), uk(rng)};
        const Complex lhs = moshinsky(x, k, t) + moshinsky(-x, -k, t);
        const Complex rhs = std::exp(Complex{0.0, 1.0}*(k*x - 0.5*k*k*t));
        g.check(std::abs(lhs - rhs) <= 1e-11*std::max(1.0, std::abs(rhs)),
                "Moshinsky sum identity");
    }
}

void propagators_group(Group& g) {
    const PhysicalParams p{1.0, 1.0, 1.0, 1.0};
    g.check_close(k_free(p, 0.3, 0.7, 0.3),
                  std::sqrt(1.0/(2.0*kPi*0.7))*kExpMinusIPiQuarter, 1e-13,
                  "k_free coincidence modulus");
    g.check_close(psi_cap(p, 0.7, 1.0),
                  {0.47742739801572006, -0.05911759098900154}, 1e-10, "psi_cap(0.7,1)");
    PhysicalParams p0 = p;
    p0.v0 = 0.0;
    g.check_close(k_td_full(p0, 0.4, 0.9, -0.2), k_isho(p, 0.4, 0.9, -0.2), 1e-14,
                  "k_td_full V0->0");
    g.check_close(Complex{psi_delta(p, 0.0), 0.0}, {1.0, 0.0}, 1e-14, "psi_delta(0)");
}

void mapping_group(Group& g) {
    const PhysicalParams p{1.0, 1.0, 1.0, 1.0};
    const ScalingProfile prof = ScalingProfile::exponential(p.omega);
    const auto base_free = PropagatorHandle::free_particle(p);
    const auto base_delta = PropagatorHandle::static_delta(p);
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.05, 4.0);
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng), xp = ux(rng), t = ut(rng);
        const Complex direct = k_td_full(p, x, t, xp);
        const Complex mapped = mapped_kernel(prof, base_delta, p, x, t, xp);
        g.check(std::abs(direct - mapped) <= 1e-12*std::max(1.0, std::abs(direct)),
                "k_td_full vs mapped static-delta");
        const Complex iso = k_isho(p, x, t, xp);
        const Complex mfree = mapped_kernel(prof, base_free, p, x, t, xp);
        g.check(std::abs(iso - mfree) <= 1e-12*std::max(1.0, std::abs(iso)),
                "k_isho vs mapped free");
    }
    const auto res = ode_residuals(prof, p, {0.0, 0.5, 1.0, 2.0});
    for (double r : res) g.check(r < 1e-12, "exponential profile residual");
}

void spectral_group(Group& g) {
    PhysicalParams p{1.0, 1.0, 1.0, 1.0};
    const auto ladder = gamma_pole_ladder(p, 4);
    for (int j = 0; j < 4; ++j) {
        g.check(std::abs(ladder[j] - Complex{0.0, -(2.0*j + 0.5)}) < 1e-15, "Gamma ladder");
    }
    const PoleResult pole = find_delta_pole(p);
    g.check_close(pole.e_pole, {-0.661220489448595485, -0.143445983691191108}, 1e-6,
                  "delta pole at omega=V0=1");
    PhysicalParams tiny = p;
    tiny.omega = 1e-3;
    const PoleResult pole0 = find_delta_pole(tiny);
    g.check(std::abs(pole0.e_r + 0.5) < 0.01*0.5, "pole Re at omega->0");
}

void numerics_group(Group& g) {
    const double inf = std::numeric_limits<double>::infinity();
    auto gauss = [](double x) { return Complex{std::exp(-x*x), 0.0}; };
    g.check_close(integrate_line(gauss, -inf, inf).value, {std::sqrt(kPi), 0.0}, 1e-12,
                  "Gaussian integral");
    auto fresnel = [](double x) { return std::exp(Complex{0.0, x*x}); };
    QuadratureConfig qc;
    qc.abs_tol = 1e-10;
    qc.rel_tol = 1e-9;
    const Complex want = std::sqrt(kPi)*kExpPlusIPiQuarter;
    bool fres_ok;
    try {
        const Complex got = integrate_line(fresnel, -inf, inf, qc).value;
        fres_ok = std::abs(got - want) < 1e-8*std::abs(want);
    } catch (const QuadratureError& e) {
        fres_ok = std::abs(e.best - want) < 1e-8*std::abs(want);
    }
    g.check(fres_ok, "Fresnel integral");
}

void scenarios_group(Group& g) {
    OpticalTrapParams deep;
    OpticalTrapParams shallow = deep;
    shallow.v0_nk = 2286.0;
    g.check(classify_metastable_well(deep).has_well, "well at 2400 nK");
    g.check(!classify_metastable_well(shallow).has_well, "no well at 2286 nK");
    const double mg = gravity_force_nk_per_um(87.0);
    g.check(std::abs(mg - 103.0) < 0.02*103.0, "mg vs 103 nK/um");
}

}  // namespace

int run_selftest(std::ostream& os) {
    struct Entry {
        const char* name;
        void (*fn)(Group&);
    };
    const Entry entries[] = {
        {"specfun", specfun_group},     {"propagators", propagators_group},
        {"mapping", mapping_group},     {"spectral", spectral_group},
        {"numerics", numerics_group},   {"scenarios", scenarios_group},
    };
    int rc = 0;
    for (const auto& e : entries) {
        Group g{e.name, {}, true};
        try {
            e.fn(g);
        } catch (const std::exception& ex) {
            g.ok = false;
            g.fail << "exception: " << ex.what();
        }
        if (g.ok) {
            os << "PASS " << g.name << "\n";
        } else {
            os << "FAIL " << g.name << ": " << g.fail.str() << "\n";
            rc = 1;
        }
    }
    return rc;
}

}  // namespace tdwell
