#include "levysde/drift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levysde/errors.hpp"

namespace levysde {
namespace {

double sign(double v) noexcept {
    return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

double weierstrass_time(const WeierstrassParams& p, double t) noexcept {
    double sum = 0.0;
    double amp = 1.0;
    double freq = 1.0;
    for (int k = 0; k < p.n_w; ++k) {
        sum += amp * std::cos(std::numbers::pi * freq * t);
        amp *= p.a;
        freq *= p.b_freq;
    }
    return sum;
}

double weierstrass_space(const WeierstrassParams& p, double x) noexcept {
    const double decay = std::pow(2.0, -p.gamma);
    double sum = 0.0;
    double amp = 1.0;
    double freq = 1.0;
    for (int j = 0; j < p.n_mu; ++j) {
        sum += amp * std::cos(freq * std::numbers::pi * x);
        amp *= decay;
        freq *= 2.0;
    }
    return sum;
}

void check_weierstrass(const WeierstrassParams& p) {
    if (!(p.a > 0.0 && p.a < 1.0) || !(p.b_freq > 1.0) || p.n_w < 1 || !(p.gamma > 0.0) ||
        p.n_mu < 1) {
        throw InvalidArgument(
            "weierstrass drift needs 0 < a < 1, b_freq > 1, n_w >= 1, gamma > 0, n_mu >= 1");
    }
}

void check_oscillatory(const OscillatorySaturatedParams& p) {
    if (!(p.lbd > 0.0) || !(p.w > 0.0) || !(p.order1 > 0.0 && p.order1 < 1.0) ||
        !(p.order2 > 0.0 && p.order2 < 1.0)) {
        throw InvalidArgument(
            "oscillatory_saturated drift needs lbd > 0, w > 0, order1 and order2 in (0,1)");
    }
}

void check_horizon(double horizon) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidArgument("jump drift horizon must be positive and finite");
    }
}

constexpr std::array<std::string_view, 4> kBuiltinLabels{
    "weierstrass", "jump_linear", "piecewise_root", "oscillatory_saturated"};

}  // namespace

std::string_view to_string(DriftTag tag) noexcept {
    switch (tag) {
        case DriftTag::weierstrass: return "weierstrass";
        case DriftTag::jump_linear: return "jump_linear";
        case DriftTag::piecewise_root: return "piecewise_root";
        case DriftTag::oscillatory_saturated: return "oscillatory_saturated";
        case DriftTag::custom: return "custom";
    }
    return "custom";
}

std::optional<DriftTag> parse_drift_tag(std::string_view label) noexcept {
    for (auto tag : {DriftTag::weierstrass, DriftTag::jump_linear, DriftTag::piecewise_root,
                     DriftTag::oscillatory_saturated}) {
        if (to_string(tag) == label) return tag;
    }
    return std::nullopt;
}

DriftTag DriftSpec::tag() const noexcept { return static_cast<DriftTag>(params.index()); }

DriftSpec weierstrass_drift(const WeierstrassParams& params) {
    check_weierstrass(params);
    // Nominal exponents: ln(1/a)/ln(b) in time, gamma in space, both capped at 1.
    const HolderProfile profile{std::min(std::log(1.0 / params.a) / std::log(params.b_freq), 1.0),
                                std::min(params.gamma, 1.0)};
    return DriftSpec{params, "weierstrass", profile};
}

DriftSpec jump_linear_drift(const JumpLinearParams& params) {
    check_horizon(params.horizon);
    return DriftSpec{params, "jump_linear", std::nullopt};
}

DriftSpec piecewise_root_drift(const PiecewiseRootParams& params) {
    check_horizon(params.horizon);
    if (!(params.floor > 0.0)) {
        throw InvalidArgument("piecewise_root drift floor must be positive");
    }
    return DriftSpec{params, "piecewise_root", std::nullopt};
}

DriftSpec oscillatory_saturated_drift(const OscillatorySaturatedParams& params) {
    check_oscillatory(params);
    return DriftSpec{params, "oscillatory_saturated", std::nullopt};
}

DriftSpec custom_drift(std::string label, DriftFunction fn, std::optional<HolderProfile> profile) {
    if (!fn) {
        throw InvalidArgument("custom drift needs a callable");
    }
    if (label.empty()) {
        throw InvalidArgument("custom drift needs a label");
    }
    return DriftSpec{CustomDrift{std::move(fn)}, std::move(label), profile};
}

std::optional<DriftSpec> builtin_drift(std::string_view label) {
    const auto tag = parse_drift_tag(label);
    if (!tag) return std::nullopt;
    switch (*tag) {
        case DriftTag::weierstrass: return weierstrass_drift();
        case DriftTag::jump_linear: return jump_linear_drift();
        case DriftTag::piecewise_root: return piecewise_root_drift();
        case DriftTag::oscillatory_saturated: return oscillatory_saturated_drift();
        case DriftTag::custom: break;
    }
    return std::nullopt;
}

const std::array<std::string_view, 4>& builtin_drift_labels() noexcept { return kBuiltinLabels; }

std::array<double, 16> jump_coefficients() noexcept {
    std::array<double, 16> c{};
    for (int k = 1; k <= 16; ++k) {
        c[k - 1] = -1.0 + 0.95 * (k - 1) / 15.0;
    }
    return c;
}

double jump_profile(double t, double horizon) noexcept {
    static const auto coeffs = jump_coefficients();
    double g = 0.0;
    for (int k = 1; k <= 16; ++k) {
        g += coeffs[k - 1] * sign(k / 16.0 * horizon - t);
    }
    return g;
}

double eval_drift(const DriftSpec& spec, double t, double x) {
    struct Visitor {
        double t;
        double x;

        double operator()(const WeierstrassParams& p) const {
            return weierstrass_time(p, t) * weierstrass_space(p, x);
        }
        double operator()(const JumpLinearParams& p) const {
            return jump_profile(t, p.horizon) * x;
        }
        double operator()(const PiecewiseRootParams& p) const {
            return jump_profile(t, p.horizon) * x + std::sqrt(std::max(x, p.floor));
        }
        double operator()(const OscillatorySaturatedParams& p) const {
            const double saturated = std::min(std::pow(std::abs(x), p.order1), p.lbd);
            return saturated * std::pow(std::abs(std::sin(p.w * t)), 1.0 / 20.0) -
                   std::pow(t, p.order2);
        }
        double operator()(const CustomDrift& c) const { return c.fn(t, x); }
    };
    return std::visit(Visitor{t, x}, spec.params);
}

std::optional<double> drift_sup_bound(const DriftSpec& spec) {
    if (const auto* w = std::get_if<WeierstrassParams>(&spec.params)) {
        const double time_bound = (1.0 - std::pow(w->a, w->n_w)) / (1.0 - w->a);
        const double decay = std::pow(2.0, -w->gamma);
        const double space_bound = (1.0 - std::pow(decay, w->n_mu)) / (1.0 - decay);
        return time_bound * space_bound;
    }
    if (const auto* o = std::get_if<OscillatorySaturatedParams>(&spec.params)) {
        // b lies in [-1, lbd] for t in [0,1].
        return std::max(o->lbd, 1.0);
    }
    return std::nullopt;
}

OrderPrediction theoretical_order(double alpha, const HolderProfile& profile, double epsilon) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw InvalidArgument("theoretical_order: alpha must lie in (1,2)");
    }
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw InvalidArgument("theoretical_order: epsilon must lie in (0,1/2)");
    }
    if (!(profile.beta > 0.0 && profile.beta <= 1.0) || !(profile.eta > 0.0 && profile.eta <= 1.0)) {
        throw InvalidArgument("theoretical_order: beta and eta must lie in (0,1]");
    }
    const double gamma = std::min({profile.beta, profile.eta / alpha, 0.5});
    const bool admissible = 2.0 * profile.eta + alpha > 2.0 &&
                            (profile.beta + 1.0) * alpha + profile.eta > 2.0;
    return {gamma, 0.5 + gamma - epsilon, admissible};
}

DriftRegistry::DriftRegistry() {
    for (const auto label : kBuiltinLabels) {
        entries_.emplace(std::string(label), *builtin_drift(label));
    }
}

void DriftRegistry::register_custom(std::string label, DriftFunction fn,
                                    std::optional<HolderProfile> profile) {
    if (entries_.contains(label)) {
        throw InvalidArgument("drift label already registered: " + label);
    }
    auto spec = custom_drift(label, std::move(fn), profile);
    entries_.emplace(std::move(label), std::move(spec));
}

std::optional<DriftSpec> DriftRegistry::find(std::string_view label) const {
    const auto it = entries_.find(label);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> DriftRegistry::labels() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [label, spec] : entries_) out.push_back(label);
    return out;
}

}  // namespace levysde
