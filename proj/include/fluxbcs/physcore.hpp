#pragma once

// Physical constants and the handful of quantity types the formulas need.
// Everything is SI double precision; GHz, K and um only appear at I/O edges.

#include <compare>
#include <numbers>

namespace fluxbcs::phys {

namespace constants {
/// CODATA 2018. h, e and k_B are exact by definition of the SI.
inline constexpr double h = 6.62607015e-34;        // J s
inline constexpr double e = 1.602176634e-19;       // C
inline constexpr double k_B = 1.380649e-23;        // J / K
inline constexpr double m_e = 9.1093837015e-31;    // kg
inline constexpr double hbar = h / (2.0 * std::numbers::pi);
inline constexpr double Phi_0 = h / (2.0 * e);     // Wb
}  // namespace constants

/// Bundle of the constants above, for callers that want them as a value.
struct Constants {
    double h = constants::h;
    double hbar = constants::hbar;
    double k_B = constants::k_B;
    double m_e = constants::m_e;
    double e = constants::e;
    double Phi_0 = constants::Phi_0;
};

/// A double tagged with its physical dimension. Same-tag arithmetic and
/// scaling by plain numbers are allowed; a ratio of two quantities is a number.
template <class Tag>
struct Quantity {
    double value = 0.0;

    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value(v) {}

    constexpr Quantity operator+(Quantity o) const { return Quantity{value + o.value}; }
    constexpr Quantity operator-(Quantity o) const { return Quantity{value - o.value}; }
    constexpr Quantity operator-() const { return Quantity{-value}; }
    constexpr Quantity operator*(double s) const { return Quantity{value * s}; }
    constexpr Quantity operator/(double s) const { return Quantity{value / s}; }
    constexpr double operator/(Quantity o) const { return value / o.value; }
    constexpr Quantity& operator+=(Quantity o) { value += o.value; return *this; }
    constexpr Quantity& operator-=(Quantity o) { value -= o.value; return *this; }
    constexpr Quantity& operator*=(double s) { value *= s; return *this; }

    constexpr auto operator<=>(const Quantity&) const = default;
};

template <class Tag>
constexpr Quantity<Tag> operator*(double s, Quantity<Tag> q) { return q * s; }

struct EnergyTag {};
struct FrequencyTag {};
struct TemperatureTag {};

using Energy = Quantity<EnergyTag>;            // J
using Frequency = Quantity<FrequencyTag>;      // Hz
using Temperature = Quantity<TemperatureTag>;  // K

constexpr Energy joules(double v) { return Energy{v}; }
constexpr Frequency hertz(double v) { return Frequency{v}; }
constexpr Frequency gigahertz(double v) { return Frequency{v * 1e9}; }
constexpr Temperature kelvin(double v) { return Temperature{v}; }

constexpr double in_ghz(Frequency f) { return f.value * 1e-9; }

Frequency energy_to_frequency(Energy E);
Energy frequency_to_energy(Frequency f);
Temperature energy_to_kelvin(Energy E);
Energy kelvin_to_energy(Temperature T);

/// Shorthand for the very common "E/h in GHz" boundary conversion.
inline Energy energy_from_ghz(double ghz) { return frequency_to_energy(gigahertz(ghz)); }
inline double energy_in_ghz(Energy E) { return in_ghz(energy_to_frequency(E)); }

}  // namespace fluxbcs::phys
