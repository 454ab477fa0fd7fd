// tdwell command-line front end: figure reproduction, pole tables, selftest.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tdwell/config.hpp"
#include "tdwell/csv.hpp"
#include "tdwell/errors.hpp"
#include "tdwell/scenarios.hpp"
#include "tdwell/selftest.hpp"
#include "tdwell/special_functions.hpp"
#include "tdwell/spectral.hpp"
#include "tdwell/version.hpp"

namespace {

using tdwell::ParamEcho;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binding of a config-file key to an option target, applied only when the
// flag was not given on the command line (flags > file > defaults).
struct KeyBinding {
    CLI::Option* opt;
    std::function<void(const std::string&)> set;
};
using Bindings = std::map<std::string, KeyBinding>;

void apply_config_file(const std::string& path, Bindings& bindings) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    for (const auto& [key, val] : tdwell::parse_config_file(in)) {
        auto it = bindings.find(key);
        if (it == bindings.end()) throw UsageError("unknown config key: " + key);
        if (it->second.opt->count() == 0) it->second.set(val);
    }
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw UsageError("not a number: " + s);
    return v;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_double(item));
    }
    if (out.empty()) throw UsageError("empty list: " + s);
    return out;
}

void bind_num(Bindings& b, CLI::Option* opt, const std::string& key, double* target) {
    b[key] = {opt, [target](const std::string& v) { *target = parse_double(v); }};
}
void bind_int(Bindings& b, CLI::Option* opt, const std::string& key, int* target) {
    b[key] = {opt, [target](const std::string& v) {
                  *target = static_cast<int>(std::lround(parse_double(v)));
              }};
}
void bind_str(Bindings& b, CLI::Option* opt, const std::string& key, std::string* target) {
    b[key] = {opt, [target](const std::string& v) { *target = v; }};
}

void require_positive(double v, const std::string& name) {
    if (!(v > 0.0)) throw UsageError(name + " must be positive");
}

std::filesystem::path snapshot_path(const std::filesystem::path& base, int idx) {
    std::filesystem::path p = base;
    const std::string stem = p.stem().string();
    const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
    p.replace_filename(stem + "_s" + std::to_string(idx) + ext);
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tdwell: analytic propagators and tunneling lifetimes of a "
                 "time-dependent quantum well"};
    app.set_version_flag("--version", std::string("tdwell ") + tdwell::kVersion);
    app.require_subcommand(1);

    // ---- fig2
    auto* fig2 = app.add_subcommand("fig2", "survival-probability curves (a)-(d)");
    tdwell::Fig2Config f2;
    std::string f2_out = "fig2.csv", f2_config;
    Bindings f2b;
    bind_num(f2b, fig2->add_option("--omega", f2.params.omega, "oscillator frequency")->capture_default_str(), "omega", &f2.params.omega);
    bind_num(f2b, fig2->add_option("--v0", f2.params.v0, "delta strength")->capture_default_str(), "v0", &f2.params.v0);
    bind_num(f2b, fig2->add_option("--t-max", f2.t_max, "time horizon")->capture_default_str(), "t_max", &f2.t_max);
    int f2_samples = f2.n_samples;
    bind_int(f2b, fig2->add_option("--samples", f2_samples, "number of time steps")->capture_default_str(), "samples", &f2_samples);
    bind_num(f2b, fig2->add_option("--x-span", f2.x_span, "overlap window half-width")->capture_default_str(), "x_span", &f2.x_span);
    bind_int(f2b, fig2->add_option("--out-n", f2.out_n, "overlap grid points")->capture_default_str(), "out_n", &f2.out_n);
    bind_int(f2b, fig2->add_option("--oracle-n", f2.oracle_n, "oracle grid points")->capture_default_str(), "oracle_n", &f2.oracle_n);
    bind_num(f2b, fig2->add_option("--oracle-span", f2.oracle_span, "oracle half-width")->capture_default_str(), "oracle_span", &f2.oracle_span);
    bind_num(f2b, fig2->add_option("--oracle-dt", f2.oracle_dt, "oracle step")->capture_default_str(), "oracle_dt", &f2.oracle_dt);
    bind_num(f2b, fig2->add_option("--sigma-frac", f2.sigma_frac, "delta width fraction")->capture_default_str(), "sigma_frac", &f2.sigma_frac);
    bind_num(f2b, fig2->add_option("--abs-tol", f2.quad.abs_tol, "quadrature abs tol")->capture_default_str(), "abs_tol", &f2.quad.abs_tol);
    bind_num(f2b, fig2->add_option("--rel-tol", f2.quad.rel_tol, "quadrature rel tol")->capture_default_str(), "rel_tol", &f2.quad.rel_tol);
    bind_str(f2b, fig2->add_option("--out", f2_out, "output CSV")->capture_default_str(), "out", &f2_out);
    auto* f2cfg = fig2->add_option("--config", f2_config, "key=value config file");

    // ---- fig3
    auto* fig3 = app.add_subcommand("fig3", "atom-laser release snapshots");
    tdwell::Fig3Config f3;
    std::string f3_out = "fig3.csv", f3_config, f3_snaps = "0,0.5,1,1.5";
    Bindings f3b;
    bind_num(f3b, fig3->add_option("--alpha", f3.alpha, "cosh-well asymmetry")->capture_default_str(), "alpha", &f3.alpha);
    bind_num(f3b, fig3->add_option("--mu", f3.mu_per_m, "inverse length scale (1/m)")->capture_default_str(), "mu", &f3.mu_per_m);
    bind_num(f3b, fig3->add_option("--omega-hz", f3.omega_hz, "release rate / 2 pi (Hz)")->capture_default_str(), "omega_hz", &f3.omega_hz);
    bind_num(f3b, fig3->add_option("--mass-u", f3.mass_u, "atom mass (u)")->capture_default_str(), "mass_u", &f3.mass_u);
    bind_str(f3b, fig3->add_option("--snapshots", f3_snaps, "omega*t list")->capture_default_str(), "snapshots", &f3_snaps);
    bind_num(f3b, fig3->add_option("--x-span", f3.x_span, "grid half-width (1/mu)")->capture_default_str(), "x_span", &f3.x_span);
    bind_int(f3b, fig3->add_option("--out-n", f3.out_n, "grid points")->capture_default_str(), "out_n", &f3.out_n);
    bind_num(f3b, fig3->add_option("--abs-tol", f3.quad.abs_tol, "quadrature abs tol")->capture_default_str(), "abs_tol", &f3.quad.abs_tol);
    bind_num(f3b, fig3->add_option("--rel-tol", f3.quad.rel_tol, "quadrature rel tol")->capture_default_str(), "rel_tol", &f3.quad.rel_tol);
    bind_str(f3b, fig3->add_option("--out", f3_out, "output CSV stem")->capture_default_str(), "out", &f3_out);
    auto* f3cfg = fig3->add_option("--config", f3_config, "key=value config file");

    // ---- fig1
    auto* fig1 = app.add_subcommand("fig1", "optical trap metastability cut");
    tdwell::OpticalTrapParams well;
    double f1_v0_alt = 2286.0, f1_xmin = -30.0, f1_xmax = 81.0;
    int f1_nx = 400;
    std::string f1_out = "fig1.csv", f1_config;
    Bindings f1b;
    bind_num(f1b, fig1->add_option("--v0", well.v0_nk, "trap depth (nK)")->capture_default_str(), "v0", &well.v0_nk);
    bind_num(f1b, fig1->add_option("--v0-alt", f1_v0_alt, "comparison depth (nK)")->capture_default_str(), "v0_alt", &f1_v0_alt);
    bind_num(f1b, fig1->add_option("--w0", well.w0_um, "beam waist (um)")->capture_default_str(), "w0", &well.w0_um);
    bind_num(f1b, fig1->add_option("--force", well.f_nk_per_um, "gravity force (nK/um)")->capture_default_str(), "force", &well.f_nk_per_um);
    bind_num(f1b, fig1->add_option("--x-min", f1_xmin, "cut start (um)")->capture_default_str(), "x_min", &f1_xmin);
    bind_num(f1b, fig1->add_option("--x-max", f1_xmax, "cut end (um)")->capture_default_str(), "x_max", &f1_xmax);
    bind_int(f1b, fig1->add_option("--nx", f1_nx, "cut samples")->capture_default_str(), "nx", &f1_nx);
    bind_str(f1b, fig1->add_option("--out", f1_out, "output CSV")->capture_default_str(), "out", &f1_out);
    auto* f1cfg = fig1->add_option("--config", f1_config, "key=value config file");

    // ---- poles
    auto* poles = app.add_subcommand("poles", "delta-well resonance poles");
    std::string po_list = "0.001,0.1,0.5,1,2", po_out = "poles.csv", po_config;
    double po_v0 = 1.0;
    Bindings pob;
    bind_str(pob, poles->add_option("--omega-list", po_list, "omega values")->capture_default_str(), "omega_list", &po_list);
    bind_num(pob, poles->add_option("--v0", po_v0, "delta strength")->capture_default_str(), "v0", &po_v0);
    bind_str(pob, poles->add_option("--out", po_out, "output CSV")->capture_default_str(), "out", &po_out);
    auto* pocfg = poles->add_option("--config", po_config, "key=value config file");

    // ---- moshinsky-table
    auto* mosh = app.add_subcommand("moshinsky-table", "tabulate M(x,k,t)");
    double mo_xmin = -5.0, mo_xmax = 5.0, mo_kre = 0.0, mo_kim = -1.0, mo_t = 1.0;
    int mo_nx = 201;
    std::string mo_out = "moshinsky.csv", mo_config;
    Bindings mob;
    bind_num(mob, mosh->add_option("--x-min", mo_xmin)->capture_default_str(), "x_min", &mo_xmin);
    bind_num(mob, mosh->add_option("--x-max", mo_xmax)->capture_default_str(), "x_max", &mo_xmax);
    bind_int(mob, mosh->add_option("--nx", mo_nx)->capture_default_str(), "nx", &mo_nx);
    bind_num(mob, mosh->add_option("--k-re", mo_kre)->capture_default_str(), "k_re", &mo_kre);
    bind_num(mob, mosh->add_option("--k-im", mo_kim)->capture_default_str(), "k_im", &mo_kim);
    bind_num(mob, mosh->add_option("--t", mo_t)->capture_default_str(), "t", &mo_t);
    bind_str(mob, mosh->add_option("--out", mo_out, "output CSV")->capture_default_str(), "out", &mo_out);
    auto* mocfg = mosh->add_option("--config", mo_config, "key=value config file");

    // ---- selftest
    auto* selftest = app.add_subcommand("selftest", "fast regression groups");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fig2->parsed()) {
            if (f2cfg->count()) apply_config_file(f2_config, f2b);
            f2.n_samples = f2_samples;
            require_positive(f2.params.omega, "omega");
            require_positive(f2.params.v0, "v0");
            require_positive(f2.t_max, "t_max");
            require_positive(f2.oracle_dt, "oracle_dt");
            if (f2.n_samples < 2) throw UsageError("samples must be >= 2");
            const auto curves = tdwell::run_fig2(f2);
            ParamEcho echo{{"omega", tdwell::format_num(f2.params.omega)},
                           {"V0", tdwell::format_num(f2.params.v0)},
                           {"t_max", tdwell::format_num(f2.t_max)},
                           {"samples", tdwell::format_num(f2.n_samples)},
                           {"sigma_frac", tdwell::format_num(f2.sigma_frac)}};
            tdwell::write_text_atomic(f2_out, tdwell::fig2_csv(curves, echo));
        } else if (fig3->parsed()) {
            if (f3cfg->count()) apply_config_file(f3_config, f3b);
            require_positive(f3.alpha, "alpha");
            require_positive(f3.mu_per_m, "mu");
            require_positive(f3.omega_hz, "omega_hz");
            require_positive(f3.mass_u, "mass_u");
            f3.omega_t_snapshots = parse_list(f3_snaps);
            const auto snaps = tdwell::run_fig3(f3);
            ParamEcho echo{{"alpha", tdwell::format_num(f3.alpha)},
                           {"mu_per_m", tdwell::format_num(f3.mu_per_m)},
                           {"omega_hz", tdwell::format_num(f3.omega_hz)},
                           {"mass_u", tdwell::format_num(f3.mass_u)}};
            for (std::size_t i = 0; i < snaps.size(); ++i) {
                tdwell::write_text_atomic(snapshot_path(f3_out, static_cast<int>(i)),
                                          tdwell::fig3_snapshot_csv(snaps[i], f3, echo));
            }
        } else if (fig1->parsed()) {
            if (f1cfg->count()) apply_config_file(f1_config, f1b);
            require_positive(well.v0_nk, "v0");
            require_positive(f1_v0_alt, "v0_alt");
            require_positive(well.w0_um, "w0");
            require_positive(well.f_nk_per_um, "force");
            if (f1_nx < 2) throw UsageError("nx must be >= 2");
            tdwell::OpticalTrapParams shallow = well;
            shallow.v0_nk = f1_v0_alt;
            ParamEcho echo{{"w0_um", tdwell::format_num(well.w0_um)},
                           {"F_nK_per_um", tdwell::format_num(well.f_nk_per_um)}};
            tdwell::write_text_atomic(
                f1_out, tdwell::fig1_csv(well, shallow, f1_xmin, f1_xmax, f1_nx, echo));
        } else if (poles->parsed()) {
            if (pocfg->count()) apply_config_file(po_config, pob);
            require_positive(po_v0, "v0");
            std::vector<tdwell::PoleRow> rows;
            for (double om : parse_list(po_list)) {
                require_positive(om, "omega");
                tdwell::PhysicalParams p{1.0, 1.0, om, po_v0};
                rows.push_back({om, po_v0, tdwell::find_delta_pole(p)});
            }
            ParamEcho echo{{"V0", tdwell::format_num(po_v0)}};
            tdwell::write_text_atomic(po_out, tdwell::poles_csv(rows, echo));
        } else if (mosh->parsed()) {
            if (mocfg->count()) apply_config_file(mo_config, mob);
            require_positive(mo_t, "t");
            if (mo_nx < 2) throw UsageError("nx must be >= 2");
            if (!(mo_xmin < mo_xmax)) throw UsageError("x_min must be < x_max");
            ParamEcho echo{{"k", tdwell::format_num(mo_kre) + "+" + tdwell::format_num(mo_kim) + "i"},
                           {"t", tdwell::format_num(mo_t)}};
            tdwell::write_text_atomic(
                mo_out, tdwell::moshinsky_table_csv(mo_xmin, mo_xmax, mo_nx,
                                                    {mo_kre, mo_kim}, mo_t, echo));
        } else if (selftest->parsed()) {
            return tdwell::run_selftest(std::cout) == 0 ? kExitOk : kExitNumerical;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tdwell::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
