#pragma once

// Rendering of sweeps, separation tables and the EIRP table, plus the
// command entry points used by the CLI.

#include "fsscoex/config.hpp"
#include "fsscoex/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fsscoex {

enum ExitCode : int { ExitOk = 0, ExitValidation = 2, ExitIo = 3 };

struct NamedSeries {
    std::string name; // "n1", "n5", ...
    SweepSeries series;
};

/// One series per requested count, all on the configured grid.
std::vector<NamedSeries> build_sweeps(const RunConfig& cfg);

/// `distance_m,sinr_db[,series]` preceded by `#` assumption lines.
std::string render_sweep_csv(const RunConfig& cfg, const std::vector<NamedSeries>& series);
/// Static line chart of SINR vs distance.
std::string render_sweep_svg(const RunConfig& cfg, const std::vector<NamedSeries>& series);
std::string render_sweep_table(const RunConfig& cfg, const std::vector<NamedSeries>& series);

std::string render_separation_table(const RunConfig& cfg);
std::string render_separation_csv(const RunConfig& cfg);

std::string render_eirp_table();

/// Commands write to `cfg.out` (or `out` when empty); diagnostics go to `err`.
int run_sweep_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_separation_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_eirp_table_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace fsscoex
