#pragma once

#include <span>

namespace levysde {

struct LineFit {
    double slope;
    double intercept;
};

/// Ordinary least-squares line y = slope * x + intercept. Needs >= 2 points with distinct x.
LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace levysde
