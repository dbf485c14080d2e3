#include "levysde/stable_levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "levysde/errors.hpp"
#include "levysde/regression.hpp"

namespace levysde {

StableParams::StableParams(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw InvalidArgument("stability index alpha must lie in the open interval (1,2), got " +
                              std::to_string(alpha));
    }
}

IncrementGrid::IncrementGrid(double alpha, double horizon, std::vector<double> increments)
    : alpha_(StableParams(alpha).alpha()), horizon_(horizon), increments_(std::move(increments)) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidArgument("increment grid horizon must be positive and finite");
    }
    if (increments_.empty()) {
        throw InvalidArgument("increment grid needs at least one step");
    }
}

double grid_time(double horizon, std::size_t k, std::size_t n) noexcept {
    return horizon * (static_cast<double>(k) / static_cast<double>(n));
}

double IncrementGrid::time(std::size_t k) const noexcept {
    return grid_time(horizon_, k, n_steps());
}

double cms_symmetric(double alpha, double angle, double exp_draw) noexcept {
    const double cos_angle = std::cos(angle);
    const double lead = std::sin(alpha * angle) / std::pow(cos_angle, 1.0 / alpha);
    const double tail = std::pow(std::cos((1.0 - alpha) * angle) / exp_draw, (1.0 - alpha) / alpha);
    return lead * tail;
}

double sample_standard_symmetric_stable(const StableParams& params, RandomSource& rng) {
    const double angle = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double exp_draw = rng.exponential();
    return cms_symmetric(params.alpha(), angle, exp_draw);
}

IncrementGrid sample_increment_grid(const StableParams& params, std::size_t n_steps,
                                    double horizon, RandomSource& rng) {
    if (n_steps == 0) {
        throw InvalidArgument("sample_increment_grid: n_steps must be at least 1");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidArgument("sample_increment_grid: horizon must be positive and finite");
    }
    const double h = horizon / static_cast<double>(n_steps);
    const double scale = std::pow(h, 1.0 / params.alpha());
    std::vector<double> increments(n_steps);
    for (auto& inc : increments) {
        inc = scale * sample_standard_symmetric_stable(params, rng);
    }
    return IncrementGrid(params.alpha(), horizon, std::move(increments));
}

LevyPath cumulate(const IncrementGrid& grid) {
    const std::size_t n = grid.n_steps();
    LevyPath path;
    path.times.resize(n + 1);
    path.values.resize(n + 1);
    path.values[0] = 0.0;
    const auto incs = grid.increments();
    for (std::size_t k = 0; k < n; ++k) {
        path.values[k + 1] = path.values[k] + incs[k];
    }
    for (std::size_t k = 0; k <= n; ++k) {
        path.times[k] = grid.time(k);
    }
    return path;
}

IncrementGrid coarsen(const IncrementGrid& grid, std::size_t factor) {
    if (factor == 0 || grid.n_steps() % factor != 0) {
        throw InvalidArgument("coarsen: factor " + std::to_string(factor) +
                              " does not divide n_steps " + std::to_string(grid.n_steps()));
    }
    const auto fine = grid.increments();
    std::vector<double> coarse(grid.n_steps() / factor);
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        double sum = 0.0;
        for (std::size_t i = j * factor; i < (j + 1) * factor; ++i) {
            sum += fine[i];
        }
        coarse[j] = sum;
    }
    return IncrementGrid(grid.alpha(), grid.horizon(), std::move(coarse));
}

double moment_scaling_estimate(const StableParams& params, double p,
                               std::span<const double> t_values,
                               std::size_t samples_per_t, RandomSource& rng) {
    if (!(p > 0.0 && p < params.alpha())) {
        throw InvalidArgument("moment_scaling_estimate: need 0 < p < alpha");
    }
    if (t_values.size() < 2) {
        throw InvalidArgument("moment_scaling_estimate: need at least two t values");
    }
    if (samples_per_t == 0) {
        throw InvalidArgument("moment_scaling_estimate: samples_per_t must be positive");
    }
    std::vector<double> log_t;
    std::vector<double> log_moment;
    log_t.reserve(t_values.size());
    log_moment.reserve(t_values.size());
    for (const double t : t_values) {
        if (!(t > 0.0 && t <= 1.0)) {
            throw InvalidArgument("moment_scaling_estimate: t values must lie in (0,1]");
        }
        const double scale = std::pow(t, 1.0 / params.alpha());
        double sum = 0.0;
        for (std::size_t i = 0; i < samples_per_t; ++i) {
            const double l_t = scale * sample_standard_symmetric_stable(params, rng);
            sum += std::min(std::pow(std::abs(l_t), p), 1.0);
        }
        log_t.push_back(std::log(t));
        log_moment.push_back(std::log(sum / static_cast<double>(samples_per_t)));
    }
    return least_squares_line(log_t, log_moment).slope;
}

}  // namespace levysde
