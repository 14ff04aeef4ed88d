#include "fluxbcs/fluxqubit.hpp"

#include <cmath>
#include <string>

#include "fluxbcs/error.hpp"

namespace fluxbcs::qubit {

namespace {

void require_positive_length(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be a positive finite length");
    }
}

}  // namespace

Geometry Geometry::from_perimeter(double perimeter, double line_width, double line_thickness) {
    require_positive_length(perimeter, "loop perimeter");
    require_positive_length(line_width, "line width");
    require_positive_length(line_thickness, "line thickness");
    return Geometry(perimeter, line_width, line_thickness);
}

Geometry Geometry::from_square_side(double side, double line_width, double line_thickness) {
    require_positive_length(side, "loop side");
    return from_perimeter(4.0 * side, line_width, line_thickness);
}

void QubitParams::validate() const {
    if (!(E_L.value > 0.0) || !std::isfinite(E_L.value)) {
        throw DomainError("E_L must be positive and finite");
    }
    if (!(E_J.value >= 0.0) || !std::isfinite(E_J.value)) {
        throw DomainError("E_J must be non-negative and finite");
    }
    if (!(std::abs(delta) < 0.5)) {
        throw DomainError("flux offset delta must satisfy |delta| < 0.5");
    }
}

Energy loop_energy(std::uint64_t pair_states, const Geometry& geometry) {
    using namespace phys::constants;
    if (pair_states == 0) {
        throw DomainError("pair-state count K must be at least 1");
    }
    const double l = geometry.perimeter();
    return Energy{static_cast<double>(pair_states) * h * h / (4.0 * m_e * l * l)};
}

double k_from_loop_energy(Energy E_L, const Geometry& geometry) {
    using namespace phys::constants;
    if (!(E_L.value > 0.0) || !std::isfinite(E_L.value)) {
        throw DomainError("E_L must be positive and finite");
    }
    const double l = geometry.perimeter();
    return 4.0 * m_e * l * l * E_L.value / (h * h);
}

double sample_volume(const Geometry& geometry) {
    return geometry.perimeter() * geometry.line_width() * geometry.line_thickness();
}

double cooper_pair_density(double pair_states, double volume_m3) {
    if (!(pair_states > 0.0) || !(volume_m3 > 0.0)) {
        throw DomainError("Cooper-pair density needs positive K and volume");
    }
    constexpr double cm3_per_m3 = 1e6;
    return pair_states / (2.0 * volume_m3 * cm3_per_m3);
}

Frequency qubit_frequency(const QubitParams& params, FluxBias bias) {
    const double mu_eff = bias.mu_ext + params.delta;
    const double asym = params.E_L.value * (1.0 - 2.0 * mu_eff);
    return phys::energy_to_frequency(Energy{std::hypot(asym, params.E_J.value)});
}

CurveSeries spectrum_curve(const QubitParams& params, double mu_min, double mu_max, double step) {
    params.validate();
    const auto grid = sample_grid(mu_min, mu_max, step);
    std::vector<CurveSeries::Point> pts;
    pts.reserve(grid.size());
    for (double mu : grid) {
        pts.push_back({mu, phys::in_ghz(qubit_frequency(params, FluxBias{mu}))});
    }
    return CurveSeries("mu_ext", "f_ghz", std::move(pts));
}

}  // namespace fluxbcs::qubit
