#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fluxbcs {

/// Ordered (x, y) samples with axis labels; the common export record for
/// every figure. x is strictly increasing and both labels are non-empty.
class CurveSeries {
public:
    struct Point {
        double x;
        double y;
    };

    CurveSeries(std::string x_label, std::string y_label, std::vector<Point> points);

    const std::string& x_label() const { return x_label_; }
    const std::string& y_label() const { return y_label_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

private:
    std::string x_label_;
    std::string y_label_;
    std::vector<Point> points_;
};

/// Evenly spaced grid `lo, lo+step, ...` up to `hi`. When the span is an
/// integer number of steps (to 1e-9 of a step) the last sample is exactly
/// `hi`. Throws DomainError for an empty or inverted range, a non-positive
/// step, or a step larger than the span.
std::vector<double> sample_grid(double lo, double hi, double step);

}  // namespace fluxbcs
