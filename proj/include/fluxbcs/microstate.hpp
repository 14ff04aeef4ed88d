#pragma once

// Toy-scale exact model of the loop: hard-core Cooper-pair occupations
// n_{k,mu} in {0,1}, their flux sectors and magnetic energies, the excited
// pair amplitude bookkeeping, and a 2x2 two-level Hamiltonian that is
// diagonalized numerically as an independent check of the spectrum formula.

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fluxbcs/fluxqubit.hpp"
#include "fluxbcs/physcore.hpp"

namespace fluxbcs::micro {

using phys::Energy;
using phys::Frequency;

inline constexpr int kMaxPairStates = 12;        // K
inline constexpr int kMaxFluxIndex = 3;          // M
inline constexpr std::size_t kMaxConfigurations = 5'000'000;

/// Occupation table n_{k,mu} for k in 1..K and mu in -M..M.
class Configuration {
public:
    /// Empty table.
    Configuration(int pair_states, int max_flux);

    int pair_states() const { return K_; }
    int max_flux() const { return M_; }
    int pair_count() const { return pairs_; }

    bool occupied(int k, int mu) const { return cells_[index(k, mu)] != 0; }
    /// Throws DomainError on out-of-range indices.
    void set(int k, int mu, bool on);

    /// N_mu = sum_k n_{k,mu}.
    int flux_population(int mu) const;

    /// Flat row-major view, k outer and mu inner (mu ascending from -M).
    const std::vector<std::uint8_t>& cells() const { return cells_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend bool operator<(const Configuration& a, const Configuration& b) { return a.cells_ < b.cells_; }

private:
    std::size_t index(int k, int mu) const;

    int K_;
    int M_;
    int pairs_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Total flux quantum number F = sum mu n_{k,mu}.
struct FluxSector {
    int F = 0;
    friend auto operator<=>(const FluxSector&, const FluxSector&) = default;
};

/// Every table with exactly `pairs` occupied cells, in ascending
/// lexicographic order of cells(). Throws SizeError past the K, M or
/// configuration-count limits.
std::vector<Configuration> enumerate_configurations(int pair_states, int max_flux, int pairs);

FluxSector total_flux(const Configuration& c);

/// E_L (F - mu_ext)^2.
Energy magnetic_energy(const Configuration& c, double mu_ext, Energy E_L);

/// Moves the pair at (k, nu) to (k, nu+1). Throws DomainError when (k, nu)
/// is empty, (k, nu+1) is occupied or nu+1 > M.
Configuration population_shift(const Configuration& c, int nu, int k);
/// Same, using the lowest k for which the move is allowed.
Configuration population_shift(const Configuration& c, int nu);
/// All distinct results of population_shift(c, nu, k) over k, ordered by k.
std::vector<Configuration> population_shifts(const Configuration& c, int nu);
/// Moves the pair at (k, nu+1) back to (k, nu).
Configuration inverse_population_shift(const Configuration& c, int nu, int k);

/// Transition amplitudes xi_{nu,k}, in sqrt(J) so that |xi|^2 is an energy.
struct ExcitedAmplitudes {
    std::map<std::pair<int, int>, std::complex<double>> xi;
};

/// Scales every amplitude by 1/sqrt(sum |xi|^2). Throws DomainError if all
/// amplitudes vanish.
ExcitedAmplitudes normalize_excited_state(const ExcitedAmplitudes& amplitudes);

/// E_J = sum |xi|^2.
Energy josephson_energy(const ExcitedAmplitudes& amplitudes);

/// [[-eps/2, coupling/2], [coupling/2, eps/2]].
struct TwoLevelHamiltonian {
    Energy eps;
    Energy coupling;

    Eigen::Matrix2d matrix() const;
};

/// eps = E_L (1 - 2 mu~), coupling = E_J.
TwoLevelHamiltonian two_level_hamiltonian(const qubit::QubitParams& params, qubit::FluxBias bias);

/// (lambda_max - lambda_min) / h from a numerical eigendecomposition.
Frequency two_level_splitting(const TwoLevelHamiltonian& H);

/// Brute-force summary of the lowest magnetic energy per flux sector.
struct SectorReport {
    std::size_t configuration_count = 0;
    std::map<int, Energy> sector_minimum;   // F -> min energy
    int ground_flux = 0;
    Energy ground_energy;
    /// All configurations attaining the global minimum, lexicographic.
    std::vector<Configuration> ground_configurations;
    /// Sectors whose minimum equals the ground energy to 1e-12 relative.
    std::vector<int> degenerate_sectors;
};

/// Runs enumerate_configurations and reduces over magnetic_energy. When
/// several sectors tie, ground_flux is the one closest to zero (then the
/// smaller F).
SectorReport analyze_sectors(int pair_states, int max_flux, int pairs, double mu_ext, Energy E_L);

}  // namespace fluxbcs::micro
