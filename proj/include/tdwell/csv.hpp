#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tdwell/scenarios.hpp"
#include "tdwell/spectral.hpp"

namespace tdwell {

using ParamEcho = std::vector<std::pair<std::string, std::string>>;

/// UTF-8 text written atomically (temp file in the same directory + rename).
/// Throws std::system_error / filesystem_error on I/O failure.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// 15-significant-digit formatting used by every CSV column.
std::string format_num(double v);

/// '#'-prefixed header lines: artifact version plus a parameter echo.
std::string csv_header(const std::string& command, const ParamEcho& params);

std::string fig2_csv(const std::array<SurvivalCurve, 4>& curves, const ParamEcho& params);

struct PoleRow {
    double omega;
    double v0;
    PoleResult pole;
};
std::string poles_csv(const std::vector<PoleRow>& rows, const ParamEcho& params);

/// One file per snapshot: columns x,re_psi,im_psi,abs2_psi,abs2_free,V
/// (x in um, V in nK, psi in the internal dimensionless units).
std::string fig3_snapshot_csv(const Fig3Snapshot& snap, const Fig3Config& cfg,
                              const ParamEcho& params);

/// Potential cuts for the two trap depths plus classifier verdicts.
std::string fig1_csv(const OpticalTrapParams& well, const OpticalTrapParams& nowell,
                     double x_min_um, double x_max_um, int nx, const ParamEcho& params);

std::string moshinsky_table_csv(double x_min, double x_max, int nx, Complex k, double t,
                                const ParamEcho& params);

}  // namespace tdwell
