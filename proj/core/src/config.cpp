#include "levysde/config.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <set>
#include <string>

#include "levysde/errors.hpp"

namespace levysde {
namespace {

const std::set<std::string, std::less<>> kTopLevelKeys{
    "alphas", "drift", "master_seed", "preset", "ref_level", "levels", "n_sims", "y0", "horizon"};

std::string known_labels() {
    std::string out;
    for (const auto label : builtin_drift_labels()) {
        if (!out.empty()) out += ", ";
        out += label;
    }
    return out;
}

template <typename T>
T read_scalar(const YAML::Node& node, std::string_view key, std::string_view expected) {
    if (!node.IsScalar()) {
        throw ConfigError(fmt::format("config key '{}': expected {}", key, expected));
    }
    try {
        return node.as<T>();
    } catch (const YAML::BadConversion&) {
        throw ConfigError(fmt::format("config key '{}': expected {}, got '{}'", key, expected,
                                      node.Scalar()));
    }
}

template <typename T>
std::vector<T> read_list(const YAML::Node& node, std::string_view key, std::string_view expected) {
    std::vector<T> out;
    if (node.IsScalar()) {
        out.push_back(read_scalar<T>(node, key, expected));
        return out;
    }
    if (!node.IsSequence()) {
        throw ConfigError(fmt::format("config key '{}': expected a list of {}", key, expected));
    }
    for (const auto& item : node) out.push_back(read_scalar<T>(item, key, expected));
    return out;
}

void check_keys(const YAML::Node& map, const std::set<std::string, std::less<>>& allowed,
                std::string_view where) {
    for (const auto& entry : map) {
        const auto key = entry.first.as<std::string>();
        if (!allowed.contains(key)) {
            throw ConfigError(fmt::format("unknown {} key '{}'", where, key));
        }
    }
}

DriftSpec read_drift(const YAML::Node& node) {
    std::string name;
    if (node.IsScalar()) {
        name = node.Scalar();
    } else if (node.IsMap() && node["name"]) {
        name = read_scalar<std::string>(node["name"], "drift.name", "a drift label");
    } else {
        throw ConfigError("config key 'drift': expected a drift label or a map with a 'name' key");
    }
    const auto tag = parse_drift_tag(name);
    if (!tag) {
        throw ConfigError(
            fmt::format("unknown drift label '{}' (known: {})", name, known_labels()));
    }
    if (node.IsScalar()) return *builtin_drift(name);

    auto num = [&](const char* key, double fallback) {
        const auto child = node[key];
        return child ? read_scalar<double>(child, fmt::format("drift.{}", key), "a number")
                     : fallback;
    };
    auto integer = [&](const char* key, int fallback) {
        const auto child = node[key];
        return child ? read_scalar<int>(child, fmt::format("drift.{}", key), "an integer")
                     : fallback;
    };

    DriftSpec spec;
    try {
        switch (*tag) {
            case DriftTag::weierstrass: {
                check_keys(node, {"name", "a", "b_freq", "n_w", "gamma", "n_mu", "beta", "eta"},
                           "weierstrass drift");
                WeierstrassParams p;
                p.a = num("a", p.a);
                p.b_freq = num("b_freq", p.b_freq);
                p.n_w = integer("n_w", p.n_w);
                p.gamma = num("gamma", p.gamma);
                p.n_mu = integer("n_mu", p.n_mu);
                spec = weierstrass_drift(p);
                break;
            }
            case DriftTag::jump_linear: {
                check_keys(node, {"name", "horizon", "beta", "eta"}, "jump_linear drift");
                JumpLinearParams p;
                p.horizon = num("horizon", p.horizon);
                spec = jump_linear_drift(p);
                break;
            }
            case DriftTag::piecewise_root: {
                check_keys(node, {"name", "horizon", "floor", "beta", "eta"}, "piecewise_root drift");
                PiecewiseRootParams p;
                p.horizon = num("horizon", p.horizon);
                p.floor = num("floor", p.floor);
                spec = piecewise_root_drift(p);
                break;
            }
            case DriftTag::oscillatory_saturated: {
                check_keys(node, {"name", "lbd", "w", "order1", "order2", "beta", "eta"},
                           "oscillatory_saturated drift");
                OscillatorySaturatedParams p;
                p.lbd = num("lbd", p.lbd);
                p.w = num("w", p.w);
                p.order1 = num("order1", p.order1);
                p.order2 = num("order2", p.order2);
                spec = oscillatory_saturated_drift(p);
                break;
            }
            case DriftTag::custom:
                break;
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("invalid drift parameters: {}", e.what()));
    }

    const bool has_beta = static_cast<bool>(node["beta"]);
    const bool has_eta = static_cast<bool>(node["eta"]);
    if (has_beta != has_eta) {
        throw ConfigError("drift Holder profile needs both 'beta' and 'eta'");
    }
    if (has_beta) {
        spec.profile = HolderProfile{num("beta", 0.0), num("eta", 0.0)};
        if (!(spec.profile->beta > 0.0 && spec.profile->beta <= 1.0) ||
            !(spec.profile->eta > 0.0 && spec.profile->eta <= 1.0)) {
            throw ConfigError("drift Holder exponents beta and eta must lie in (0,1]");
        }
    }
    return spec;
}

Preset read_preset(const YAML::Node& node) {
    const auto name = read_scalar<std::string>(node, "preset", "a preset name");
    const auto preset = parse_preset(name);
    if (!preset) {
        throw ConfigError(
            fmt::format("unknown preset '{}' (known: desk-scale, paper-scale)", name));
    }
    return *preset;
}

YAML::Node load_document(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigError(fmt::format("malformed config document: {}", e.what()));
    }
    if (!root.IsMap()) {
        throw ConfigError("malformed config document: expected a key/value mapping at top level");
    }
    return root;
}

}  // namespace

StudyConfig parse_config(std::string_view text, const std::vector<ConfigOverride>& overrides) {
    YAML::Node root = load_document(text);

    for (const auto& [key, value] : overrides) {
        if (!kTopLevelKeys.contains(key)) {
            throw ConfigError(fmt::format("unknown config key '{}' in override", key));
        }
        YAML::Node parsed;
        try {
            parsed = YAML::Load(value);
        } catch (const YAML::Exception& e) {
            throw ConfigError(fmt::format("malformed override for '{}': {}", key, e.what()));
        }
        if (key == "preset") {
            // A later preset beats earlier explicit sizes.
            root.remove("ref_level");
            root.remove("levels");
            root.remove("n_sims");
        }
        root[key] = parsed;
    }

    check_keys(root, kTopLevelKeys, "config");
    for (const char* required : {"alphas", "drift", "master_seed"}) {
        if (!root[required]) {
            throw ConfigError(fmt::format("config is missing required key '{}'", required));
        }
    }

    StudyConfig config;
    if (root["preset"]) apply_preset(config, read_preset(root["preset"]));

    config.alphas = read_list<double>(root["alphas"], "alphas", "a number");
    config.drift = read_drift(root["drift"]);
    config.master_seed =
        read_scalar<std::uint64_t>(root["master_seed"], "master_seed", "an unsigned 64-bit integer");
    if (root["ref_level"]) config.ref_level = read_scalar<int>(root["ref_level"], "ref_level", "an integer");
    if (root["levels"]) config.levels = read_list<int>(root["levels"], "levels", "an integer");
    if (root["n_sims"]) {
        const auto n = read_scalar<long long>(root["n_sims"], "n_sims", "an integer");
        if (n < 0) throw ConfigError("config key 'n_sims': must be positive");
        config.n_sims = static_cast<std::size_t>(n);
    }
    if (root["y0"]) config.y0 = read_scalar<double>(root["y0"], "y0", "a number");
    if (root["horizon"]) config.horizon = read_scalar<double>(root["horizon"], "horizon", "a number");

    try {
        config.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("invalid config: {}", e.what()));
    }
    return config;
}

std::string serialize_config(const StudyConfig& config) {
    auto real = [](double v) { return fmt::format("{:.17g}", v); };

    std::string out;
    out += "alphas: [";
    for (std::size_t i = 0; i < config.alphas.size(); ++i) {
        if (i) out += ", ";
        out += real(config.alphas[i]);
    }
    out += "]\n";

    out += "drift:\n";
    out += fmt::format("  name: {}\n", config.drift.label);
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, WeierstrassParams>) {
                out += fmt::format("  a: {}\n  b_freq: {}\n  n_w: {}\n  gamma: {}\n  n_mu: {}\n",
                                   real(p.a), real(p.b_freq), p.n_w, real(p.gamma), p.n_mu);
            } else if constexpr (std::is_same_v<P, JumpLinearParams>) {
                out += fmt::format("  horizon: {}\n", real(p.horizon));
            } else if constexpr (std::is_same_v<P, PiecewiseRootParams>) {
                out += fmt::format("  horizon: {}\n  floor: {}\n", real(p.horizon), real(p.floor));
            } else if constexpr (std::is_same_v<P, OscillatorySaturatedParams>) {
                out += fmt::format("  lbd: {}\n  w: {}\n  order1: {}\n  order2: {}\n", real(p.lbd),
                                   real(p.w), real(p.order1), real(p.order2));
            } else {
                throw InvalidArgument("serialize_config: custom drift '" + config.drift.label +
                                      "' has no document form");
            }
        },
        config.drift.params);
    if (config.drift.profile) {
        out += fmt::format("  beta: {}\n  eta: {}\n", real(config.drift.profile->beta),
                           real(config.drift.profile->eta));
    }

    out += fmt::format("ref_level: {}\n", config.ref_level);
    out += "levels: [";
    for (std::size_t i = 0; i < config.levels.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(config.levels[i]);
    }
    out += "]\n";
    out += fmt::format("n_sims: {}\n", config.n_sims);
    out += fmt::format("master_seed: {}\n", config.master_seed);
    out += fmt::format("y0: {}\n", real(config.y0));
    out += fmt::format("horizon: {}\n", real(config.horizon));
    return out;
}

}  // namespace levysde
