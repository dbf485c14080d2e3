#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levysde/random.hpp"

namespace levysde {

/// Stability index of a standard symmetric alpha-stable law, restricted to 1 < alpha < 2.
class StableParams {
public:
    explicit StableParams(double alpha);

    double alpha() const noexcept { return alpha_; }

    friend bool operator==(const StableParams&, const StableParams&) = default;

private:
    double alpha_;
};

/**
 * Increments of a symmetric alpha-stable Levy process on a uniform grid
 * t_k = horizon * k / n_steps. Each increment is L_{t_{k+1}} - L_{t_k}.
 */
class IncrementGrid {
public:
    IncrementGrid(double alpha, double horizon, std::vector<double> increments);

    double alpha() const noexcept { return alpha_; }
    double horizon() const noexcept { return horizon_; }
    std::size_t n_steps() const noexcept { return increments_.size(); }
    double step() const noexcept { return horizon_ / static_cast<double>(n_steps()); }
    std::span<const double> increments() const noexcept { return increments_; }

    /// Grid time of index k; nested dyadic grids produce bit-identical shared times.
    double time(std::size_t k) const noexcept;

private:
    double alpha_;
    double horizon_;
    std::vector<double> increments_;
};

/// Levy path values on grid points; values[0] == 0.
struct LevyPath {
    std::vector<double> times;
    std::vector<double> values;
};

/// Grid time horizon * (k / n); shared by every grid-producing routine.
double grid_time(double horizon, std::size_t k, std::size_t n) noexcept;

/**
 * Chambers-Mallows-Stuck map for the symmetric case.
 *
 * angle must lie in (-pi/2, pi/2) and exp_draw > 0. The result has
 * characteristic function exp(-|u|^alpha) when angle is uniform and exp_draw
 * is standard exponential.
 */
double cms_symmetric(double alpha, double angle, double exp_draw) noexcept;

/// One standard symmetric alpha-stable variate (scale 1, characteristic function exp(-|u|^alpha)).
double sample_standard_symmetric_stable(const StableParams& params, RandomSource& rng);

/// n_steps i.i.d. increments distributed as L_h with h = horizon / n_steps.
IncrementGrid sample_increment_grid(const StableParams& params, std::size_t n_steps,
                                    double horizon, RandomSource& rng);

/// Left-to-right partial sums of the increments, starting from 0.
LevyPath cumulate(const IncrementGrid& grid);

/// Sums consecutive blocks of `factor` increments. factor must divide n_steps.
IncrementGrid coarsen(const IncrementGrid& grid, std::size_t factor);

/**
 * Fitted exponent of t -> E[min(|L_t|^p, 1)] on a log-log scale.
 *
 * For 0 < p < alpha the truncated moment scales like t^(p/alpha) for small t.
 * Each t gets its own independent batch of samples_per_t draws of L_t.
 */
double moment_scaling_estimate(const StableParams& params, double p,
                               std::span<const double> t_values,
                               std::size_t samples_per_t, RandomSource& rng);

}  // namespace levysde
