#include "fluxbcs/physcore.hpp"

namespace fluxbcs::phys {

Frequency energy_to_frequency(Energy E) { return Frequency{E.value / constants::h}; }

Energy frequency_to_energy(Frequency f) { return Energy{f.value * constants::h}; }

Temperature energy_to_kelvin(Energy E) { return Temperature{E.value / constants::k_B}; }

Energy kelvin_to_energy(Temperature T) { return Energy{T.value * constants::k_B}; }

}  // namespace fluxbcs::phys
