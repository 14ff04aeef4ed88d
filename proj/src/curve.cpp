#include "fluxbcs/curve.hpp"

#include <algorithm>
#include <cmath>

#include "fluxbcs/error.hpp"

namespace fluxbcs {

CurveSeries::CurveSeries(std::string x_label, std::string y_label, std::vector<Point> points)
    : x_label_(std::move(x_label)), y_label_(std::move(y_label)), points_(std::move(points)) {
    if (x_label_.empty() || y_label_.empty()) {
        throw DomainError("curve labels must be non-empty");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i].x > points_[i - 1].x)) {
            throw DomainError("curve x values must be strictly increasing");
        }
    }
}

std::vector<double> sample_grid(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw DomainError("range bounds and step must be finite");
    }
    if (!(lo < hi)) {
        throw DomainError("range is empty or inverted");
    }
    if (!(step > 0.0)) {
        throw DomainError("step must be positive");
    }
    const double span = hi - lo;
    const double steps = span / step;
    if (steps < 1.0 - 1e-9) {
        throw DomainError("step is larger than the range");
    }
    const double whole = std::round(steps);
    const bool exact = std::abs(steps - whole) <= 1e-9 * std::max(1.0, whole);
    const auto intervals = static_cast<std::size_t>(exact ? whole : std::floor(steps));
    if (intervals > 50'000'000) {
        throw DomainError("range/step would produce more than 5e7 samples");
    }

    std::vector<double> grid(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        grid[i] = exact ? lo + span * (static_cast<double>(i) / static_cast<double>(intervals))
                        : lo + static_cast<double>(i) * step;
    }
    if (exact) {
        grid.back() = hi;
    }
    return grid;
}

}  // namespace fluxbcs
