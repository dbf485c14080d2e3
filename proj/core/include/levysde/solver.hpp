#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levysde/drift.hpp"
#include "levysde/random.hpp"
#include "levysde/stable_levy.hpp"

namespace levysde {

enum class SolverKind { classical_em, randomised_em };

std::string_view to_string(SolverKind kind) noexcept;
std::optional<SolverKind> parse_solver_kind(std::string_view name) noexcept;

/// Grid values of the drift component Y = X - L.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> y_values;
    SolverKind kind = SolverKind::classical_em;
    std::string drift_label;
};

/// Per-step evaluation offsets theta_k; the drift is evaluated at t_k + h theta_k.
class RandomisationDraws {
public:
    /// Explicit offsets in [0,1). theta = 0 everywhere reduces to the classical scheme.
    explicit RandomisationDraws(std::vector<double> thetas);

    /// n fresh uniforms on (0,1).
    static RandomisationDraws sample(std::size_t n, RandomSource& rng);

    std::span<const double> thetas() const noexcept { return thetas_; }
    std::size_t size() const noexcept { return thetas_.size(); }

private:
    std::vector<double> thetas_;
};

/**
 * Steps Y_{k+1} = Y_k + h b(s_k, Y_k + L_k) over the grid, with L_k the path
 * value at the left endpoint. s_k = t_k for classical_em and t_k + h theta_k
 * for randomised_em, theta_k drawn fresh from rng each step. classical_em
 * draws nothing from rng.
 *
 * Throws SolverError naming the step if the drift returns a non-finite value.
 */
Trajectory solve(SolverKind kind, const DriftSpec& spec, const IncrementGrid& grid,
                 double y0, RandomSource& rng);

/// Same recursion with caller-supplied offsets (one per step; ignored for classical_em).
Trajectory solve(SolverKind kind, const DriftSpec& spec, const IncrementGrid& grid,
                 double y0, const RandomisationDraws& draws);

/// X_k = Y_k + L_k. Throws InvalidArgument if the grids differ.
std::vector<double> reconstruct_x(const Trajectory& traj, const LevyPath& path);

/**
 * max_j |coarse.y[j] - fine.y[j * r]| where r = fine steps / coarse steps.
 * The coarse grid times must be a subset of the fine grid times.
 */
double max_deviation(const Trajectory& coarse, const Trajectory& fine);

}  // namespace levysde
