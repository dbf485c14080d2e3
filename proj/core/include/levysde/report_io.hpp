#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "levysde/experiment.hpp"
#include "levysde/solver.hpp"
#include "levysde/stable_levy.hpp"

namespace levysde {

/// Real number with 17 significant digits (round-trips binary64).
std::string format_real(double value);

/// "method,alpha,drift,level,stepsize,rms_error" rows sorted by (method, alpha, level).
void emit_convergence_csv(const ConvergenceReport& report, std::ostream& out);

/// "method,alpha,drift,slope,intercept,predicted_order"; absent values are empty fields.
void emit_slopes_csv(const ConvergenceReport& report, std::ostream& out);

/// Both tables in one stream, the slopes block after a "# slopes" comment (gnuplot index 1).
void emit_report_csv(const ConvergenceReport& report, std::ostream& out);

/// Writes convergence.csv and slopes.csv under dir. Throws IoError with the path.
void write_report_files(const ConvergenceReport& report, const std::filesystem::path& dir);

/// "t,L,Y,X" rows; Y and X are blank without a trajectory.
void emit_path_csv(const LevyPath& path, const std::optional<Trajectory>& traj, std::ostream& out);

}  // namespace levysde
