#pragma once

// Loop geometry, the two-level flux-qubit spectrum, and the inversion chain
// from a fitted loop energy to the Cooper-pair count and density.

#include <cstdint>

#include "fluxbcs/curve.hpp"
#include "fluxbcs/physcore.hpp"

namespace fluxbcs::qubit {

using phys::Energy;
using phys::Frequency;

/// Thickness above which the uniform current-density assumption is no
/// longer trusted.
inline constexpr double kUniformThicknessLimit = 100e-9;  // m

/// Superconducting loop made of a line of given width and thickness.
/// All lengths in meters and strictly positive.
class Geometry {
public:
    static Geometry from_perimeter(double perimeter, double line_width, double line_thickness);
    /// Square loop of the given side; the perimeter is four sides.
    static Geometry from_square_side(double side, double line_width, double line_thickness);

    double perimeter() const { return perimeter_; }
    double line_width() const { return line_width_; }
    double line_thickness() const { return line_thickness_; }

    /// True when the film is thicker than kUniformThicknessLimit, i.e. the
    /// uniform-current model is being used outside its stated range.
    bool thickness_warning() const { return line_thickness_ > kUniformThicknessLimit; }

private:
    Geometry(double perimeter, double width, double thickness)
        : perimeter_(perimeter), line_width_(width), line_thickness_(thickness) {}

    double perimeter_;
    double line_width_;
    double line_thickness_;
};

/// Fitted spectrum parameters. delta is an additive flux offset in Phi_0 units.
struct QubitParams {
    Energy E_L;
    Energy E_J;
    double delta = 0.0;

    /// Throws DomainError unless E_L > 0, E_J >= 0 and |delta| < 0.5.
    void validate() const;
};

/// External flux in Phi_0 units.
struct FluxBias {
    double mu_ext = 0.0;
};

/// E_L = K h^2 / (4 m_e l^2).
Energy loop_energy(std::uint64_t pair_states, const Geometry& geometry);

/// Inverse of loop_energy; K is returned unrounded.
double k_from_loop_energy(Energy E_L, const Geometry& geometry);

/// Line volume, perimeter x width x thickness, in m^3.
double sample_volume(const Geometry& geometry);

/// kappa_CP = K / (2 V). Volume in m^3; the result is per cm^3.
double cooper_pair_density(double pair_states, double volume_m3);

/// Level splitting sqrt([E_L (1 - 2 mu~)]^2 + E_J^2) / h with mu~ = mu_ext + delta.
Frequency qubit_frequency(const QubitParams& params, FluxBias bias);

/// qubit_frequency sampled on sample_grid(mu_min, mu_max, step).
/// x is mu_ext, y is the frequency in GHz.
CurveSeries spectrum_curve(const QubitParams& params, double mu_min, double mu_max, double step);

}  // namespace fluxbcs::qubit
