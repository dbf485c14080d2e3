#include "levysde/report_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <tuple>

#include "levysde/errors.hpp"

namespace levysde {
namespace {

std::string optional_real(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string{};
}

void check_stream(const std::ostream& out, std::string_view what) {
    if (!out) throw IoError(fmt::format("failed writing {}", what));
}

void write_file(const std::filesystem::path& path, const ConvergenceReport& report,
                void (*emit)(const ConvergenceReport&, std::ostream&)) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    emit(report, file);
    file.flush();
    if (!file) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

void emit_convergence_csv(const ConvergenceReport& report, std::ostream& out) {
    auto rows = report.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
        return std::tuple(to_string(l.method), l.alpha, l.level) <
               std::tuple(to_string(r.method), r.alpha, r.level);
    });
    out << "method,alpha,drift,level,stepsize,rms_error\n";
    for (const auto& row : rows) {
        out << fmt::format("{},{},{},{},{},{}\n", to_string(row.method), format_real(row.alpha),
                           row.drift_label, row.level, format_real(row.stepsize),
                           format_real(row.rms_error));
    }
    check_stream(out, "convergence table");
}

void emit_slopes_csv(const ConvergenceReport& report, std::ostream& out) {
    auto slopes = report.slopes;
    std::stable_sort(slopes.begin(), slopes.end(), [](const auto& l, const auto& r) {
        return std::tuple(to_string(l.method), l.alpha) < std::tuple(to_string(r.method), r.alpha);
    });
    out << "method,alpha,drift,slope,intercept,predicted_order\n";
    for (const auto& s : slopes) {
        out << fmt::format("{},{},{},{},{},{}\n", to_string(s.method), format_real(s.alpha),
                           s.drift_label, optional_real(s.slope), optional_real(s.intercept),
                           optional_real(s.predicted_order));
    }
    check_stream(out, "slopes table");
}

void emit_report_csv(const ConvergenceReport& report, std::ostream& out) {
    emit_convergence_csv(report, out);
    out << "\n\n# slopes\n";
    emit_slopes_csv(report, out);
}

void write_report_files(const ConvergenceReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(),
                                  ec.message()));
    }
    write_file(dir / "convergence.csv", report, &emit_convergence_csv);
    write_file(dir / "slopes.csv", report, &emit_slopes_csv);
}

void emit_path_csv(const LevyPath& path, const std::optional<Trajectory>& traj, std::ostream& out) {
    std::vector<double> x;
    if (traj) x = reconstruct_x(*traj, path);
    out << "t,L,Y,X\n";
    for (std::size_t k = 0; k < path.times.size(); ++k) {
        if (traj) {
            out << fmt::format("{},{},{},{}\n", format_real(path.times[k]),
                               format_real(path.values[k]), format_real(traj->y_values[k]),
                               format_real(x[k]));
        } else {
            out << fmt::format("{},{},,\n", format_real(path.times[k]), format_real(path.values[k]));
        }
    }
    check_stream(out, "path table");
}

}  // namespace levysde
