// levysde: command-line front end for stable-driven SDE convergence studies.
//
//   levysde converge --config study.yaml [--out DIR] [--preset paper-scale|desk-scale]
//                    [--set key=value ...]
//   levysde sample-path --alpha A --steps N --seed S [--drift LABEL] [--method M] [--out FILE]
//   levysde list-drifts
//   levysde predict-order --alpha A --beta B --eta E [--epsilon EPS]
//
// Exit codes: 0 ok, 2 configuration/usage error, 3 runtime/solver error, 4 I/O error.
// LEVYSDE_WORKERS sets the worker thread count for converge.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "levysde/config.hpp"
#include "levysde/drift.hpp"
#include "levysde/errors.hpp"
#include "levysde/experiment.hpp"
#include "levysde/report_io.hpp"
#include "levysde/solver.hpp"
#include "levysde/stable_levy.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitIo = 4;

unsigned workers_from_env() {
    const char* raw = std::getenv("LEVYSDE_WORKERS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    const long n = std::strtol(raw, &end, 10);
    if (*end != '\0' || n < 1) {
        throw levysde::ConfigError(fmt::format("LEVYSDE_WORKERS must be a positive integer, got '{}'", raw));
    }
    return static_cast<unsigned>(n);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw levysde::IoError(fmt::format("cannot open config file '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in && !in.eof()) throw levysde::IoError(fmt::format("failed reading '{}'", path));
    return buf.str();
}

struct ConvergeArgs {
    std::string config_path;
    std::string out_dir;
    std::string preset;
    std::vector<std::string> sets;
};

int run_converge(const ConvergeArgs& args) {
    std::vector<levysde::ConfigOverride> overrides;
    if (!args.preset.empty()) overrides.emplace_back("preset", args.preset);
    for (const auto& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw levysde::ConfigError(fmt::format("--set expects key=value, got '{}'", kv));
        }
        overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    const auto config = levysde::parse_config(read_file(args.config_path), overrides);
    const auto report = levysde::run_study(config, {workers_from_env()});
    if (args.out_dir.empty()) {
        levysde::emit_report_csv(report, std::cout);
        std::cout.flush();
        if (!std::cout) throw levysde::IoError("failed writing report to stdout");
    } else {
        levysde::write_report_files(report, args.out_dir);
    }
    return 0;
}

struct SamplePathArgs {
    double alpha = 1.5;
    std::size_t steps = 1024;
    std::uint64_t seed = 0;
    double horizon = 1.0;
    double y0 = 0.0;
    std::string drift;
    std::string method = "randomised_em";
    std::string out;
};

int run_sample_path(const SamplePathArgs& args) {
    std::optional<levysde::StableParams> params;
    try {
        params.emplace(args.alpha);
    } catch (const levysde::InvalidArgument& e) {
        throw levysde::ConfigError(e.what());
    }
    std::optional<levysde::DriftSpec> drift;
    std::optional<levysde::SolverKind> kind;
    if (!args.drift.empty()) {
        drift = levysde::builtin_drift(args.drift);
        if (!drift) throw levysde::ConfigError(fmt::format("unknown drift label '{}'", args.drift));
        kind = levysde::parse_solver_kind(args.method);
        if (!kind) throw levysde::ConfigError(fmt::format("unknown method '{}'", args.method));
    }

    // Same lane layout as one study simulation with this seed.
    levysde::RandomSource inc_rng(levysde::lane_seed(args.seed, levysde::StreamLane::increments));
    const auto grid = levysde::sample_increment_grid(*params, args.steps, args.horizon, inc_rng);
    const auto path = levysde::cumulate(grid);

    std::optional<levysde::Trajectory> traj;
    if (drift) {
        levysde::RandomSource theta_rng(
            levysde::lane_seed(args.seed, levysde::StreamLane::reference_thetas));
        traj = levysde::solve(*kind, *drift, grid, args.y0, theta_rng);
    }

    if (args.out.empty()) {
        levysde::emit_path_csv(path, traj, std::cout);
    } else {
        std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
        if (!file) throw levysde::IoError(fmt::format("cannot open '{}' for writing", args.out));
        levysde::emit_path_csv(path, traj, file);
        file.flush();
        if (!file) throw levysde::IoError(fmt::format("failed writing '{}'", args.out));
    }
    return 0;
}

int run_list_drifts() {
    std::cout << "# label,formula,parameters,holder_beta,holder_eta\n";
    std::cout << "weierstrass,W(t)*mu(x) truncated Weierstrass sums,"
                 "a=0.5 b_freq=12 n_w=25 gamma=0.5 n_mu=25,";
    const auto w = levysde::weierstrass_drift();
    std::cout << levysde::format_real(w.profile->beta) << ','
              << levysde::format_real(w.profile->eta) << '\n';
    std::cout << "jump_linear,g(t)*x with g = sum_k c_k sign(k/16 T - t),"
                 "c_k = -1 + 0.95(k-1)/15 T=1,,\n";
    std::cout << "piecewise_root,g(t)*x + sqrt(max(x floor)),floor=1e-12 T=1,,\n";
    std::cout << "oscillatory_saturated,min(|x|^order1 lbd)*|sin(w t)|^(1/20) - t^order2,"
                 "lbd=20 w=256*pi order1=0.2 order2=0.1,,\n";
    return 0;
}

struct PredictArgs {
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double epsilon = 1e-3;
};

int run_predict_order(const PredictArgs& args) {
    levysde::OrderPrediction prediction{};
    try {
        prediction = levysde::theoretical_order(args.alpha, {args.beta, args.eta}, args.epsilon);
    } catch (const levysde::InvalidArgument& e) {
        throw levysde::ConfigError(e.what());
    }
    std::cout << "alpha,beta,eta,epsilon,gamma,rate_limit,order,admissible\n";
    std::cout << fmt::format("{},{},{},{},{},{},{},{}\n", levysde::format_real(args.alpha),
                             levysde::format_real(args.beta), levysde::format_real(args.eta),
                             levysde::format_real(args.epsilon),
                             levysde::format_real(prediction.gamma),
                             levysde::format_real(0.5 + prediction.gamma),
                             levysde::format_real(prediction.order),
                             prediction.admissible ? "true" : "false");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and convergence studies for SDEs driven by symmetric alpha-stable noise"};
    app.require_subcommand(1);

    ConvergeArgs converge_args;
    auto* converge = app.add_subcommand("converge", "Run a coupled strong-convergence study");
    converge->add_option("--config", converge_args.config_path, "Study document (YAML or JSON)")
        ->required();
    converge->add_option("--out", converge_args.out_dir,
                         "Directory for convergence.csv and slopes.csv (default: stdout)");
    converge->add_option("--preset", converge_args.preset, "Size preset")
        ->check(CLI::IsMember({"desk-scale", "paper-scale"}));
    converge->add_option("--set", converge_args.sets, "Override a config key (key=value), last wins");

    SamplePathArgs path_args;
    auto* sample = app.add_subcommand("sample-path", "Sample one Levy path, optionally with a solve");
    sample->add_option("--alpha", path_args.alpha, "Stability index in (1,2)")->required();
    sample->add_option("--steps", path_args.steps, "Number of grid steps")->required()
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", path_args.seed, "Seed")->required();
    sample->add_option("--horizon", path_args.horizon, "Time horizon")->check(CLI::PositiveNumber);
    sample->add_option("--y0", path_args.y0, "Initial value of Y");
    sample->add_option("--drift", path_args.drift, "Corpus drift label; adds Y and X columns");
    sample->add_option("--method", path_args.method, "classical_em or randomised_em");
    sample->add_option("--out", path_args.out, "Output CSV file (default: stdout)");

    auto* list = app.add_subcommand("list-drifts", "List the corpus drifts");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict-order", "Theoretical strong order of randomised EM");
    predict->add_option("--alpha", predict_args.alpha, "Stability index in (1,2)")->required();
    predict->add_option("--beta", predict_args.beta, "Time Holder exponent in (0,1]")->required();
    predict->add_option("--eta", predict_args.eta, "Space Holder exponent in (0,1]")->required();
    predict->add_option("--epsilon", predict_args.epsilon, "Order loss epsilon in (0,1/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (converge->parsed()) return run_converge(converge_args);
        if (sample->parsed()) return run_sample_path(path_args);
        if (list->parsed()) return run_list_drifts();
        if (predict->parsed()) return run_predict_order(predict_args);
    } catch (const levysde::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const levysde::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const levysde::StudyError& e) {
        std::cerr << fmt::format("study failed at alpha={} sim={} level={}: {}\n", e.alpha(),
                                 e.sim(), e.level(), e.what());
        return kExitRuntime;
    } catch (const levysde::InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitConfig;
}
