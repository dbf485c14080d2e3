#include "levysde/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "levysde/errors.hpp"
#include "levysde/stable_levy.hpp"

namespace levysde {

std::string_view to_string(Preset preset) noexcept {
    return preset == Preset::desk_scale ? "desk-scale" : "paper-scale";
}

std::optional<Preset> parse_preset(std::string_view name) noexcept {
    if (name == "desk-scale") return Preset::desk_scale;
    if (name == "paper-scale") return Preset::paper_scale;
    return std::nullopt;
}

void apply_preset(StudyConfig& config, Preset preset) {
    switch (preset) {
        case Preset::desk_scale:
            config.ref_level = 14;
            config.levels = {5, 6, 7, 8, 9};
            config.n_sims = 100;
            break;
        case Preset::paper_scale:
            config.ref_level = 17;
            config.levels = {5, 6, 7, 8, 9, 10};
            config.n_sims = 300;
            break;
    }
}

void StudyConfig::validate() const {
    if (alphas.empty()) {
        throw InvalidArgument("study needs at least one alpha");
    }
    for (const double alpha : alphas) {
        StableParams{alpha};
    }
    // 2^30 steps is far past anything a single path should hold in memory.
    if (ref_level < 1 || ref_level > 30) {
        throw InvalidArgument("ref_level must lie in [1, 30]");
    }
    if (levels.empty()) {
        throw InvalidArgument("study needs at least one coarse level");
    }
    for (const int level : levels) {
        if (level < 1 || level >= ref_level) {
            throw InvalidArgument("every level must satisfy 1 <= level < ref_level (" +
                                  std::to_string(ref_level) + "), got " + std::to_string(level));
        }
    }
    if (n_sims < 2) {
        throw InvalidArgument("n_sims must be at least 2");
    }
    if (!std::isfinite(y0)) {
        throw InvalidArgument("y0 must be finite");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidArgument("horizon must be positive and finite");
    }
}

std::uint64_t per_sim_seed(std::uint64_t master_seed, std::uint64_t alpha_index,
                           std::uint64_t sim_index) noexcept {
    std::uint64_t h = mix64(master_seed);
    h = mix64(h ^ (alpha_index + 0x632be59bd9b4e019ULL));
    return mix64(h ^ (sim_index + 0x85157af5d1c2ba4bULL));
}

std::uint64_t lane_seed(std::uint64_t sim_seed, StreamLane lane, int level) noexcept {
    auto lane_id = static_cast<std::uint64_t>(lane);
    if (lane == StreamLane::level_thetas) lane_id += static_cast<std::uint64_t>(level);
    return mix64(sim_seed ^ mix64(lane_id));
}

double rms_max_error(std::span<const double> per_sim_max_deviations) {
    if (per_sim_max_deviations.empty()) {
        throw InvalidArgument("rms_max_error: empty input");
    }
    double sum_sq = 0.0;
    for (const double d : per_sim_max_deviations) sum_sq += d * d;
    return std::sqrt(sum_sq / static_cast<double>(per_sim_max_deviations.size()));
}

LineFit fit_loglog_slope(std::span<const double> stepsizes, std::span<const double> errors) {
    if (stepsizes.size() != errors.size() || stepsizes.size() < 2) {
        throw InvalidArgument("fit_loglog_slope: need two or more (stepsize, error) pairs");
    }
    std::vector<double> log_h(stepsizes.size());
    std::vector<double> log_err(errors.size());
    for (std::size_t i = 0; i < stepsizes.size(); ++i) {
        if (!(stepsizes[i] > 0.0) || !(errors[i] > 0.0)) {
            throw InvalidArgument(
                "fit_loglog_slope: stepsizes and errors must be positive; a zero error means the "
                "scheme is exact (e.g. constant drift) and has no convergence order to fit");
        }
        log_h[i] = std::log2(stepsizes[i]);
        log_err[i] = std::log2(errors[i]);
    }
    return least_squares_line(log_h, log_err);
}

SimulationOutcome simulate_one(const StudyConfig& config, std::size_t alpha_index,
                               std::size_t sim_index) {
    const double alpha = config.alphas.at(alpha_index);
    const std::uint64_t seed = per_sim_seed(config.master_seed, alpha_index, sim_index);

    RandomSource increment_rng(lane_seed(seed, StreamLane::increments));
    const std::size_t fine_steps = std::size_t{1} << config.ref_level;
    const IncrementGrid fine =
        sample_increment_grid(StableParams{alpha}, fine_steps, config.horizon, increment_rng);

    Trajectory reference;
    try {
        RandomSource ref_rng(lane_seed(seed, StreamLane::reference_thetas));
        reference = solve(SolverKind::randomised_em, config.drift, fine, config.y0, ref_rng);
    } catch (const SolverError& e) {
        throw StudyError(alpha, sim_index, config.ref_level,
                         std::string("reference run failed: ") + e.what());
    }

    SimulationOutcome out;
    out.classical.reserve(config.levels.size());
    out.randomised.reserve(config.levels.size());
    for (const int level : config.levels) {
        const IncrementGrid coarse = coarsen(fine, std::size_t{1} << (config.ref_level - level));
        try {
            RandomSource unused(0);
            const Trajectory classical =
                solve(SolverKind::classical_em, config.drift, coarse, config.y0, unused);
            RandomSource theta_rng(lane_seed(seed, StreamLane::level_thetas, level));
            const Trajectory randomised =
                solve(SolverKind::randomised_em, config.drift, coarse, config.y0, theta_rng);
            out.classical.push_back(max_deviation(classical, reference));
            out.randomised.push_back(max_deviation(randomised, reference));
        } catch (const SolverError& e) {
            throw StudyError(alpha, sim_index, level,
                             std::string("coarse run failed: ") + e.what());
        }
    }
    return out;
}

ConvergenceReport run_study(const StudyConfig& config, const StudyOptions& options) {
    config.validate();

    const std::size_t n_alpha = config.alphas.size();
    const std::size_t n_units = n_alpha * config.n_sims;
    std::vector<SimulationOutcome> outcomes(n_units);
    std::vector<std::exception_ptr> failures(n_units);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (std::size_t unit = next.fetch_add(1); unit < n_units && !failed.load();
             unit = next.fetch_add(1)) {
            try {
                outcomes[unit] = simulate_one(config, unit / config.n_sims, unit % config.n_sims);
            } catch (...) {
                failures[unit] = std::current_exception();
                failed.store(true);
            }
        }
    };

    const unsigned n_workers =
        std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(n_units)));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    }
    // Report the lowest-index failure so the error is schedule-independent as far as possible.
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    ConvergenceReport report;
    std::vector<double> stepsizes;
    for (const int level : config.levels) {
        stepsizes.push_back(config.horizon / static_cast<double>(std::size_t{1} << level));
    }

    for (const SolverKind method : {SolverKind::classical_em, SolverKind::randomised_em}) {
        for (std::size_t a = 0; a < n_alpha; ++a) {
            const double alpha = config.alphas[a];
            std::vector<double> rms(config.levels.size());
            for (std::size_t li = 0; li < config.levels.size(); ++li) {
                std::vector<double> per_sim(config.n_sims);
                for (std::size_t s = 0; s < config.n_sims; ++s) {
                    const auto& outcome = outcomes[a * config.n_sims + s];
                    per_sim[s] = method == SolverKind::classical_em ? outcome.classical[li]
                                                                    : outcome.randomised[li];
                }
                rms[li] = rms_max_error(per_sim);
                report.rows.push_back({method, alpha, config.drift.label, config.levels[li],
                                       stepsizes[li], rms[li]});
            }

            SlopeRow slope{method, alpha, config.drift.label, std::nullopt, std::nullopt,
                           std::nullopt};
            const bool fittable = config.levels.size() >= 2 &&
                                  std::all_of(rms.begin(), rms.end(), [](double e) { return e > 0.0; });
            if (fittable) {
                const LineFit fit = fit_loglog_slope(stepsizes, rms);
                slope.slope = fit.slope;
                slope.intercept = fit.intercept;
            }
            if (method == SolverKind::randomised_em && config.drift.profile) {
                // Report the epsilon -> 0 limit 1/2 + gamma; only stated for admissible triples.
                const auto prediction = theoretical_order(alpha, *config.drift.profile, 0x1p-60);
                if (prediction.admissible) slope.predicted_order = 0.5 + prediction.gamma;
            }
            report.slopes.push_back(slope);
        }
    }

    auto row_key = [](const ConvergenceRow& r) {
        return std::tuple(to_string(r.method), r.alpha, r.level);
    };
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [&](const auto& l, const auto& r) { return row_key(l) < row_key(r); });
    auto slope_key = [](const SlopeRow& r) { return std::tuple(to_string(r.method), r.alpha); };
    std::stable_sort(report.slopes.begin(), report.slopes.end(),
                     [&](const auto& l, const auto& r) { return slope_key(l) < slope_key(r); });
    return report;
}

}  // namespace levysde
