#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace levysde {

/// b(t,x) = W(t) * mu(x), truncated Weierstrass sums in time and space.
struct WeierstrassParams {
    double a = 0.5;        ///< time amplitude ratio, 0 < a < 1
    double b_freq = 12.0;  ///< time frequency ratio, > 1
    int n_w = 25;          ///< terms in W
    double gamma = 0.5;    ///< space decay exponent, > 0
    int n_mu = 25;         ///< terms in mu

    friend bool operator==(const WeierstrassParams&, const WeierstrassParams&) = default;
};

/// b(t,x) = g(t) x with g a sum of 16 weighted sign jumps at k T / 16.
struct JumpLinearParams {
    double horizon = 1.0;

    friend bool operator==(const JumpLinearParams&, const JumpLinearParams&) = default;
};

/// b(t,x) = g(t) x + sqrt(max(x, floor)).
struct PiecewiseRootParams {
    double horizon = 1.0;
    double floor = 1e-12;

    friend bool operator==(const PiecewiseRootParams&, const PiecewiseRootParams&) = default;
};

/// b(t,x) = min(|x|^order1, lbd) |sin(w t)|^(1/20) - t^order2.
struct OscillatorySaturatedParams {
    double lbd = 20.0;
    double w = 256.0 * 3.14159265358979323846;
    double order1 = 0.2;
    double order2 = 0.1;

    friend bool operator==(const OscillatorySaturatedParams&,
                           const OscillatorySaturatedParams&) = default;
};

using DriftFunction = std::function<double(double t, double x)>;

struct CustomDrift {
    DriftFunction fn;

    // std::function has no equality; custom drifts only compare equal to themselves by label.
    friend bool operator==(const CustomDrift&, const CustomDrift&) { return true; }
};

using DriftParams = std::variant<WeierstrassParams, JumpLinearParams, PiecewiseRootParams,
                                 OscillatorySaturatedParams, CustomDrift>;

/// Nominal time/space Holder exponents of a drift.
struct HolderProfile {
    double beta;
    double eta;

    friend bool operator==(const HolderProfile&, const HolderProfile&) = default;
};

enum class DriftTag { weierstrass, jump_linear, piecewise_root, oscillatory_saturated, custom };

std::string_view to_string(DriftTag tag) noexcept;
std::optional<DriftTag> parse_drift_tag(std::string_view label) noexcept;

/// Tagged drift description. Construct through the factory functions so parameters are validated.
struct DriftSpec {
    DriftParams params;
    std::string label;
    std::optional<HolderProfile> profile;

    DriftTag tag() const noexcept;

    friend bool operator==(const DriftSpec&, const DriftSpec&) = default;
};

DriftSpec weierstrass_drift(const WeierstrassParams& params = {});
DriftSpec jump_linear_drift(const JumpLinearParams& params = {});
DriftSpec piecewise_root_drift(const PiecewiseRootParams& params = {});
DriftSpec oscillatory_saturated_drift(const OscillatorySaturatedParams& params = {});
DriftSpec custom_drift(std::string label, DriftFunction fn,
                       std::optional<HolderProfile> profile = std::nullopt);

/// Corpus drift with its default parameters, by CLI label.
std::optional<DriftSpec> builtin_drift(std::string_view label);

/// The four corpus labels in their canonical order.
const std::array<std::string_view, 4>& builtin_drift_labels() noexcept;

/// Evaluates b(t, x). Expects t in [0, horizon]; sign(0) is taken as 0.
double eval_drift(const DriftSpec& spec, double t, double x);

/// Sup-norm bound of |b| over [0,1] x R, if the drift is bounded and the bound is known.
std::optional<double> drift_sup_bound(const DriftSpec& spec);

/// c_k = -1 + 0.95 (k - 1) / 15 for k = 1..16.
std::array<double, 16> jump_coefficients() noexcept;

/// g(t) = sum_k c_k sign(k T / 16 - t).
double jump_profile(double t, double horizon) noexcept;

struct OrderPrediction {
    double gamma;       ///< min(beta, eta / alpha, 1/2)
    double order;       ///< 1/2 + gamma - epsilon
    bool admissible;    ///< 2 eta + alpha > 2 and (beta + 1) alpha + eta > 2
};

/// Predicted strong order of the randomised scheme for a drift with the given profile.
OrderPrediction theoretical_order(double alpha, const HolderProfile& profile, double epsilon);

/**
 * Label -> drift lookup. Starts with the four corpus drifts; custom drifts can
 * be added under unused labels.
 */
class DriftRegistry {
public:
    DriftRegistry();

    void register_custom(std::string label, DriftFunction fn,
                         std::optional<HolderProfile> profile = std::nullopt);
    std::optional<DriftSpec> find(std::string_view label) const;
    std::vector<std::string> labels() const;

private:
    std::map<std::string, DriftSpec, std::less<>> entries_;
};

}  // namespace levysde
