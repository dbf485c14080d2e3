#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levysde/drift.hpp"
#include "levysde/random.hpp"
#include "levysde/regression.hpp"
#include "levysde/solver.hpp"

namespace levysde {

enum class Preset { desk_scale, paper_scale };

std::string_view to_string(Preset preset) noexcept;
std::optional<Preset> parse_preset(std::string_view name) noexcept;

/// Full description of a coupled multi-resolution convergence study.
struct StudyConfig {
    std::vector<double> alphas;
    DriftSpec drift = weierstrass_drift();
    int ref_level = 14;                       ///< reference uses 2^ref_level steps
    std::vector<int> levels{5, 6, 7, 8, 9};   ///< coarse runs use 2^l steps
    std::size_t n_sims = 100;
    std::uint64_t master_seed = 0;
    double y0 = 0.0;
    double horizon = 1.0;

    /// Throws InvalidArgument on any broken invariant.
    void validate() const;

    friend bool operator==(const StudyConfig&, const StudyConfig&) = default;
};

/// Overwrites ref_level, levels and n_sims with the preset's values.
void apply_preset(StudyConfig& config, Preset preset);

struct ConvergenceRow {
    SolverKind method;
    double alpha;
    std::string drift_label;
    int level;
    double stepsize;
    double rms_error;

    friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct SlopeRow {
    SolverKind method;
    double alpha;
    std::string drift_label;
    std::optional<double> slope;       ///< empty when some rms_error is not positive
    std::optional<double> intercept;   ///< log2 scale
    std::optional<double> predicted_order;

    friend bool operator==(const SlopeRow&, const SlopeRow&) = default;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<SlopeRow> slopes;

    friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

struct StudyOptions {
    unsigned workers = 1;
};

/// Independent random lanes inside one simulation.
enum class StreamLane : std::uint64_t { increments = 0, reference_thetas = 1, level_thetas = 2 };

/// Seed of one simulation's work unit: splitmix chain over the three inputs.
std::uint64_t per_sim_seed(std::uint64_t master_seed, std::uint64_t alpha_index,
                           std::uint64_t sim_index) noexcept;

/// Seed of a lane inside a simulation; `level` only matters for level_thetas.
std::uint64_t lane_seed(std::uint64_t sim_seed, StreamLane lane, int level = 0) noexcept;

/// sqrt(mean(d_i^2)). Throws on empty input.
double rms_max_error(std::span<const double> per_sim_max_deviations);

/// Least squares on (log2 h, log2 err). Throws InvalidArgument on non-positive entries.
LineFit fit_loglog_slope(std::span<const double> stepsizes, std::span<const double> errors);

/// Per-level max deviations of one simulation, indexed like config.levels.
struct SimulationOutcome {
    std::vector<double> classical;
    std::vector<double> randomised;
};

/**
 * One coupled simulation: a fine increment grid at 2^ref_level steps, the
 * randomised reference on it, and both schemes on each coarsened grid.
 */
SimulationOutcome simulate_one(const StudyConfig& config, std::size_t alpha_index,
                               std::size_t sim_index);

/**
 * Runs every (alpha, simulation) work unit on `options.workers` threads and
 * aggregates in simulation-index order, so the report does not depend on the
 * worker count. Solver failures surface as StudyError.
 */
ConvergenceReport run_study(const StudyConfig& config, const StudyOptions& options = {});

}  // namespace levysde
