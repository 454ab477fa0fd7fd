#include "tdwell/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tdwell/errors.hpp"
#include "tdwell/special_functions.hpp"
#include "tdwell/version.hpp"

namespace tdwell {

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir/(path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string format_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string csv_header(const std::string& command, const ParamEcho& params) {
    std::ostringstream os;
    os << "# tdwell " << kVersion << " command=" << command << "\n";
    for (const auto& [k, v] : params) os << "# " << k << "=" << v << "\n";
    return os.str();
}

std::string fig2_csv(const std::array<SurvivalCurve, 4>& curves, const ParamEcho& params) {
    std::ostringstream os;
    os << csv_header("fig2", params);
    os << "t,P_a,P_b,P_c,P_d\n";
    const std::size_t n = curves[0].samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        os << format_num(curves[0].samples[j].first);
        for (const auto& c : curves) os << ',' << format_num(c.samples[j].second);
        os << '\n';
    }
    return os.str();
}

std::string poles_csv(const std::vector<PoleRow>& rows, const ParamEcho& params) {
    std::ostringstream os;
    os << csv_header("poles", params);
    os << "omega,V0,re_E,im_E,lifetime,residual\n";
    for (const auto& r : rows) {
        os << format_num(r.omega) << ',' << format_num(r.v0) << ','
           << format_num(r.pole.e_pole.real()) << ',' << format_num(r.pole.e_pole.imag())
           << ',' << format_num(r.pole.lifetime) << ',' << format_num(r.pole.residual)
           << '\n';
    }
    return os.str();
}

std::string fig3_snapshot_csv(const Fig3Snapshot& snap, const Fig3Config& cfg,
                              const ParamEcho& params) {
    const Fig3Scales sc = fig3_scales(cfg);
    std::ostringstream os;
    ParamEcho echo = params;
    echo.emplace_back("omega_t", format_num(snap.omega_t));
    echo.emplace_back("t_ms", format_num(snap.t_ms));
    os << csv_header("fig3", echo);
    os << "x,re_psi,im_psi,abs2_psi,abs2_free,V\n";
    const Grid1D& g = snap.psi.grid;
    const double um = sc.length_m*1e6;
    for (int i = 0; i < g.n; ++i) {
        const Complex a = snap.psi.amps(i);
        os << format_num(g.x(i)*um) << ',' << format_num(a.real()) << ','
           << format_num(a.imag()) << ',' << format_num(std::norm(a)) << ','
           << format_num(std::norm(snap.psi_free.amps(i))) << ','
           << format_num(snap.v_nk(i)) << '\n';
    }
    return os.str();
}

std::string fig1_csv(const OpticalTrapParams& well, const OpticalTrapParams& nowell,
                     double x_min_um, double x_max_um, int nx, const ParamEcho& params) {
    std::ostringstream os;
    ParamEcho echo = params;
    const WellClassification cw = classify_metastable_well(well);
    const WellClassification cn = classify_metastable_well(nowell);
    echo.emplace_back("well[V0=" + format_num(well.v0_nk) + "nK]", cw.has_well ? "yes" : "no");
    echo.emplace_back("well[V0=" + format_num(nowell.v0_nk) + "nK]", cn.has_well ? "yes" : "no");
    echo.emplace_back("critical_V0_nK", format_num(critical_trap_depth_nk(well)));
    echo.emplace_back("mg_nK_per_um[87u]", format_num(gravity_force_nk_per_um(87.0)));
    os << csv_header("fig1", echo);
    os << "x,V_well,V_nowell\n";
    for (int i = 0; i < nx; ++i) {
        const double x = x_min_um + (x_max_um - x_min_um)*i/(nx - 1);
        os << format_num(x) << ',' << format_num(optical_potential_cut(well, x)) << ','
           << format_num(optical_potential_cut(nowell, x)) << '\n';
    }
    return os.str();
}

std::string moshinsky_table_csv(double x_min, double x_max, int nx, Complex k, double t,
                                const ParamEcho& params) {
    std::ostringstream os;
    os << csv_header("moshinsky-table", params);
    os << "x,re_M,im_M,abs_M\n";
    for (int i = 0; i < nx; ++i) {
        const double x = x_min + (x_max - x_min)*i/(nx - 1);
        const Complex m = moshinsky(x, k, t);
        os << format_num(x) << ',' << format_num(m.real()) << ',' << format_num(m.imag())
           << ',' << format_num(std::abs(m)) << '\n';
    }
    return os.str();
}

}  // namespace tdwell
