#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "levysde/errors.hpp"
#include "levysde/experiment.hpp"

namespace levysde {
namespace {

StudyConfig small_config(DriftSpec drift, std::vector<double> alphas = {1.5}) {
    StudyConfig config;
    config.alphas = std::move(alphas);
    config.drift = std::move(drift);
    config.ref_level = 10;
    config.levels = {4, 5, 6, 7};
    config.n_sims = 12;
    config.master_seed = 1234;
    return config;
}

TEST(RmsMaxError, Examples) {
    EXPECT_NEAR(rms_max_error(std::vector<double>{0.1, 0.3}), std::sqrt(0.05), 1e-15);
    EXPECT_NEAR(rms_max_error(std::vector<double>{0.1, 0.3}), 0.223607, 1e-6);
    EXPECT_DOUBLE_EQ(rms_max_error(std::vector<double>(7, 0.42)), 0.42);
    EXPECT_EQ(rms_max_error(std::vector<double>{0.0}), 0.0);
    EXPECT_THROW(rms_max_error(std::vector<double>{}), InvalidArgument);
}

TEST(RmsMaxError, BetweenMinAndMax) {
    RandomSource rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> xs(1 + rng.next_u64() % 50);
        for (auto& x : xs) x = std::ldexp(rng.uniform_open(), -static_cast<int>(rng.next_u64() % 20));
        const double rms = rms_max_error(xs);
        const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        ASSERT_LE(*lo, rms * (1 + 1e-15));
        ASSERT_LE(rms, *hi * (1 + 1e-15));
    }
}

TEST(FitLogLogSlope, ExactPowerLaws) {
    const std::vector<double> h{0.25, 0.5, 1.0};
    const auto unit = fit_loglog_slope(h, h);
    EXPECT_NEAR(unit.slope, 1.0, 1e-15);
    EXPECT_NEAR(unit.intercept, 0.0, 1e-15);

    const auto square = fit_loglog_slope(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 4.0});
    EXPECT_NEAR(square.slope, 2.0, 1e-15);
}

TEST(FitLogLogSlope, SyntheticPowerLawOracle) {
    std::vector<double> h;
    std::vector<double> err;
    for (int l = 5; l <= 9; ++l) {
        h.push_back(std::ldexp(1.0, -l));
        err.push_back(3.0 * std::pow(h.back(), 0.75));
    }
    const auto fit = fit_loglog_slope(h, err);
    EXPECT_NEAR(fit.slope, 0.75, 1e-12);
    EXPECT_NEAR(fit.intercept, std::log2(3.0), 1e-12);
}

TEST(FitLogLogSlope, RejectsNonPositiveAndShortInput) {
    EXPECT_THROW(fit_loglog_slope(std::vector<double>{0.5, 0.25}, std::vector<double>{0.1, 0.0}),
                 InvalidArgument);
    EXPECT_THROW(fit_loglog_slope(std::vector<double>{0.5}, std::vector<double>{0.1}),
                 InvalidArgument);
    EXPECT_THROW(fit_loglog_slope(std::vector<double>{0.5, 0.25}, std::vector<double>{0.1}),
                 InvalidArgument);
}

TEST(PerSimSeed, DeterministicAndCollisionFree) {
    EXPECT_EQ(per_sim_seed(42, 1, 7), per_sim_seed(42, 1, 7));
    RandomSource rng(77);
    std::set<std::uint64_t> by_sim;
    std::set<std::uint64_t> by_alpha;
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t s = rng.next_u64();
        ASSERT_NE(per_sim_seed(s, 0, 0), per_sim_seed(s, 0, 1));
        by_sim.insert(per_sim_seed(5, 0, static_cast<std::uint64_t>(i)));
        by_alpha.insert(per_sim_seed(5, static_cast<std::uint64_t>(i), 3));
    }
    EXPECT_EQ(by_sim.size(), 10'000U);
    EXPECT_EQ(by_alpha.size(), 10'000U);
}

TEST(LaneSeed, LanesAreDistinct) {
    const std::uint64_t seed = per_sim_seed(1, 0, 0);
    std::set<std::uint64_t> lanes{lane_seed(seed, StreamLane::increments),
                                  lane_seed(seed, StreamLane::reference_thetas)};
    for (int level = 1; level <= 30; ++level) {
        lanes.insert(lane_seed(seed, StreamLane::level_thetas, level));
    }
    EXPECT_EQ(lanes.size(), 32U);
}

TEST(StudyConfig, Validation) {
    auto config = small_config(weierstrass_drift());
    EXPECT_NO_THROW(config.validate());

    auto bad = config;
    bad.levels = {4, 10};
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config;
    bad.n_sims = 1;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config;
    bad.alphas = {1.5, 2.0};
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config;
    bad.alphas.clear();
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config;
    bad.horizon = 0.0;
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(Presets, DeskAndPaperScale) {
    StudyConfig config;
    apply_preset(config, Preset::paper_scale);
    EXPECT_EQ(config.ref_level, 17);
    EXPECT_EQ(config.levels, (std::vector<int>{5, 6, 7, 8, 9, 10}));
    EXPECT_EQ(config.n_sims, 300U);
    apply_preset(config, Preset::desk_scale);
    EXPECT_EQ(config.ref_level, 14);
    EXPECT_EQ(config.levels, (std::vector<int>{5, 6, 7, 8, 9}));
    EXPECT_EQ(config.n_sims, 100U);
    EXPECT_EQ(parse_preset("paper-scale"), Preset::paper_scale);
    EXPECT_FALSE(parse_preset("huge"));
}

TEST(RunStudy, ConstantDriftHasZeroErrorEverywhere) {
    const auto report =
        run_study(small_config(custom_drift("constant", [](double, double) { return 1.0; }),
                               {1.25, 1.75}));
    ASSERT_EQ(report.rows.size(), 2U * 2U * 4U);
    for (const auto& row : report.rows) EXPECT_EQ(row.rms_error, 0.0);
    for (const auto& slope : report.slopes) {
        EXPECT_FALSE(slope.slope);
        EXPECT_FALSE(slope.intercept);
    }
}

TEST(RunStudy, OneRowPerMethodAlphaLevelSorted) {
    const auto config = small_config(oscillatory_saturated_drift(), {1.75, 1.25});
    const auto report = run_study(config);
    ASSERT_EQ(report.rows.size(), 16U);
    EXPECT_EQ(report.rows.front().method, SolverKind::classical_em);
    EXPECT_EQ(report.rows.front().alpha, 1.25);
    EXPECT_EQ(report.rows.front().level, 4);
    EXPECT_EQ(report.rows.front().stepsize, 1.0 / 16.0);
    EXPECT_EQ(report.rows.back().method, SolverKind::randomised_em);
    EXPECT_EQ(report.rows.back().alpha, 1.75);
    EXPECT_EQ(report.rows.back().level, 7);
    for (const auto& row : report.rows) EXPECT_GT(row.rms_error, 0.0);
    ASSERT_EQ(report.slopes.size(), 4U);
    for (const auto& slope : report.slopes) {
        EXPECT_TRUE(slope.slope);
        EXPECT_FALSE(slope.predicted_order);
    }
}

TEST(RunStudy, PredictedOrderOnlyForRandomisedWithProfile) {
    const auto report = run_study(small_config(weierstrass_drift()));
    for (const auto& slope : report.slopes) {
        if (slope.method == SolverKind::randomised_em) {
            ASSERT_TRUE(slope.predicted_order);
            EXPECT_NEAR(*slope.predicted_order, 0.5 + std::log(2.0) / std::log(12.0), 1e-15);
        } else {
            EXPECT_FALSE(slope.predicted_order);
        }
    }
}

TEST(RunStudy, IndependentOfWorkerCount) {
    const auto config = small_config(piecewise_root_drift(), {1.3, 1.6});
    const auto serial = run_study(config, {1});
    EXPECT_EQ(run_study(config, {3}), serial);
    EXPECT_EQ(run_study(config, {8}), serial);
}

TEST(RunStudy, RmsMatchesPerSimulationOutcomes) {
    const auto config = small_config(jump_linear_drift());
    const auto report = run_study(config);
    for (std::size_t li = 0; li < config.levels.size(); ++li) {
        std::vector<double> classical;
        std::vector<double> randomised;
        for (std::size_t s = 0; s < config.n_sims; ++s) {
            const auto outcome = simulate_one(config, 0, s);
            classical.push_back(outcome.classical[li]);
            randomised.push_back(outcome.randomised[li]);
        }
        EXPECT_EQ(report.rows[li].rms_error, rms_max_error(classical));
        EXPECT_EQ(report.rows[config.levels.size() + li].rms_error, rms_max_error(randomised));
        const auto [lo, hi] = std::minmax_element(randomised.begin(), randomised.end());
        EXPECT_LE(*lo, report.rows[config.levels.size() + li].rms_error);
        EXPECT_GE(*hi, report.rows[config.levels.size() + li].rms_error);
    }
}

// Coarse grids used in one simulation are block sums of the single fine sample.
TEST(RunStudy, CoarseAndReferenceShareOnePath) {
    const auto config = small_config(weierstrass_drift());
    const auto seed = per_sim_seed(config.master_seed, 0, 3);
    RandomSource rng(lane_seed(seed, StreamLane::increments));
    const auto fine = sample_increment_grid(StableParams(1.5), 1U << config.ref_level, 1.0, rng);
    const auto fine_path = cumulate(fine);
    for (const int level : config.levels) {
        const std::size_t factor = std::size_t{1} << (config.ref_level - level);
        const auto coarse_path = cumulate(coarsen(fine, factor));
        for (std::size_t j = 0; j < coarse_path.values.size(); ++j) {
            ASSERT_NEAR(coarse_path.values[j], fine_path.values[j * factor],
                        1e-12 * (1.0 + std::abs(fine_path.values[j * factor])) * (j * factor + 1));
        }
    }
    // With a smooth autonomous drift the coarse error is O(h) only if the coarse
    // runs see the same path as the reference; independent paths would give O(1).
    auto smooth = small_config(custom_drift("sin", [](double, double x) { return std::sin(x); }));
    for (std::size_t s = 0; s < 4; ++s) {
        const auto outcome = simulate_one(smooth, 0, s);
        EXPECT_LT(outcome.classical.back(), 0.05) << "sim " << s;
        EXPECT_LT(outcome.randomised.back(), 0.05) << "sim " << s;
    }
}

TEST(RunStudy, SolverFailureReportsCoordinates) {
    auto config = small_config(custom_drift("bad", [](double t, double x) {
        return t > 0.75 && x > -1e300 ? std::nan("") : 0.0;
    }));
    try {
        run_study(config);
        FAIL() << "expected StudyError";
    } catch (const StudyError& e) {
        EXPECT_EQ(e.alpha(), 1.5);
        EXPECT_EQ(e.sim(), 0U);
        EXPECT_EQ(e.level(), config.ref_level);
    }
}

}  // namespace
}  // namespace levysde
