#include "levysde/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levysde/errors.hpp"

namespace levysde {
namespace {

// theta_at(k) returns the offset for step k; only called for randomised_em.
template <typename ThetaAt>
Trajectory step_scheme(SolverKind kind, const DriftSpec& spec, const IncrementGrid& grid,
                       double y0, ThetaAt&& theta_at) {
    if (!std::isfinite(y0)) {
        throw InvalidArgument("solve: initial value must be finite");
    }
    const std::size_t n = grid.n_steps();
    const double h = grid.step();
    const auto incs = grid.increments();

    Trajectory traj;
    traj.kind = kind;
    traj.drift_label = spec.label;
    traj.times.resize(n + 1);
    traj.y_values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) traj.times[k] = grid.time(k);

    double y = y0;
    double levy = 0.0;
    traj.y_values[0] = y;
    for (std::size_t k = 0; k < n; ++k) {
        const double t_k = traj.times[k];
        const double t_eval = kind == SolverKind::randomised_em ? t_k + h * theta_at(k) : t_k;
        const double b = eval_drift(spec, t_eval, y + levy);
        if (!std::isfinite(b)) {
            throw SolverError(k, "drift '" + spec.label + "' returned a non-finite value at step " +
                                     std::to_string(k));
        }
        y += h * b;
        levy += incs[k];
        traj.y_values[k + 1] = y;
    }
    return traj;
}

}  // namespace

std::string_view to_string(SolverKind kind) noexcept {
    return kind == SolverKind::classical_em ? "classical_em" : "randomised_em";
}

std::optional<SolverKind> parse_solver_kind(std::string_view name) noexcept {
    if (name == "classical_em") return SolverKind::classical_em;
    if (name == "randomised_em") return SolverKind::randomised_em;
    return std::nullopt;
}

RandomisationDraws::RandomisationDraws(std::vector<double> thetas) : thetas_(std::move(thetas)) {
    const bool ok = std::all_of(thetas_.begin(), thetas_.end(),
                                [](double th) { return th >= 0.0 && th < 1.0; });
    if (!ok) {
        throw InvalidArgument("randomisation offsets must lie in [0,1)");
    }
}

RandomisationDraws RandomisationDraws::sample(std::size_t n, RandomSource& rng) {
    std::vector<double> thetas(n);
    for (auto& th : thetas) th = rng.uniform_open();
    return RandomisationDraws(std::move(thetas));
}

Trajectory solve(SolverKind kind, const DriftSpec& spec, const IncrementGrid& grid, double y0,
                 RandomSource& rng) {
    return step_scheme(kind, spec, grid, y0, [&rng](std::size_t) { return rng.uniform_open(); });
}

Trajectory solve(SolverKind kind, const DriftSpec& spec, const IncrementGrid& grid, double y0,
                 const RandomisationDraws& draws) {
    if (kind == SolverKind::randomised_em && draws.size() != grid.n_steps()) {
        throw InvalidArgument("solve: need one randomisation offset per step");
    }
    const auto thetas = draws.thetas();
    return step_scheme(kind, spec, grid, y0, [thetas](std::size_t k) { return thetas[k]; });
}

std::vector<double> reconstruct_x(const Trajectory& traj, const LevyPath& path) {
    if (traj.times != path.times || traj.y_values.size() != path.values.size()) {
        throw InvalidArgument("reconstruct_x: trajectory and path grids differ");
    }
    std::vector<double> x(traj.y_values.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = traj.y_values[k] + path.values[k];
    }
    return x;
}

double max_deviation(const Trajectory& coarse, const Trajectory& fine) {
    const std::size_t n_coarse = coarse.times.size();
    const std::size_t n_fine = fine.times.size();
    if (n_coarse < 2 || n_fine < 2 || coarse.y_values.size() != n_coarse ||
        fine.y_values.size() != n_fine) {
        throw InvalidArgument("max_deviation: malformed trajectory");
    }
    const std::size_t coarse_steps = n_coarse - 1;
    const std::size_t fine_steps = n_fine - 1;
    if (fine_steps % coarse_steps != 0) {
        throw InvalidArgument("max_deviation: grids are not nested");
    }
    const std::size_t ratio = fine_steps / coarse_steps;
    double worst = 0.0;
    for (std::size_t j = 0; j < n_coarse; ++j) {
        if (coarse.times[j] != fine.times[j * ratio]) {
            throw InvalidArgument("max_deviation: coarse time " + std::to_string(coarse.times[j]) +
                                  " is not on the fine grid");
        }
        worst = std::max(worst, std::abs(coarse.y_values[j] - fine.y_values[j * ratio]));
    }
    return worst;
}

}  // namespace levysde
