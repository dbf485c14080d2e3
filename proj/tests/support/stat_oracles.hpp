#pragma once

// Independent statistical oracles for tests. Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace levysde::testing {

struct MeanAndError {
    double mean;
    double std_error;
};

template <typename Fn>
MeanAndError mean_with_error(const std::vector<double>& xs, Fn&& f) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const double x : xs) {
        const double v = f(x);
        sum += v;
        sum_sq += v * v;
    }
    const auto n = static_cast<double>(xs.size());
    const double mean = sum / n;
    const double var = std::max(sum_sq / n - mean * mean, 0.0) * n / (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

/// Asymptotic two-sample KS critical value at significance 0.01.
inline double ks_critical_001(std::size_t na, std::size_t nb) {
    const auto n = static_cast<double>(na);
    const auto m = static_cast<double>(nb);
    return 1.628 * std::sqrt((n + m) / (n * m));
}

/// Geometric series 1 + r + ... + r^(n-1) in closed form.
inline double geometric_sum(double r, int n) { return (1.0 - std::pow(r, n)) / (1.0 - r); }

}  // namespace levysde::testing
