#include "levysde/regression.hpp"

#include "levysde/errors.hpp"

namespace levysde {

LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw InvalidArgument("least_squares_line: x and y lengths differ");
    }
    if (xs.size() < 2) {
        throw InvalidArgument("least_squares_line: need at least two points");
    }
    const auto n = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ys[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw InvalidArgument("least_squares_line: all x values coincide");
    }
    const double slope = sxy / sxx;
    return {slope, mean_y - slope * mean_x};
}

}  // namespace levysde
