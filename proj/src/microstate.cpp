#include "fluxbcs/microstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "fluxbcs/error.hpp"

namespace fluxbcs::micro {

Configuration::Configuration(int pair_states, int max_flux) : K_(pair_states), M_(max_flux) {
    if (pair_states < 1 || max_flux < 0) {
        throw DomainError("configuration needs K >= 1 and M >= 0");
    }
    cells_.assign(static_cast<std::size_t>(K_) * static_cast<std::size_t>(2 * M_ + 1), 0);
}

std::size_t Configuration::index(int k, int mu) const {
    if (k < 1 || k > K_ || mu < -M_ || mu > M_) {
        throw DomainError("slot (k=" + std::to_string(k) + ", mu=" + std::to_string(mu) +
                          ") outside the occupation table");
    }
    return static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(2 * M_ + 1) +
           static_cast<std::size_t>(mu + M_);
}

void Configuration::set(int k, int mu, bool on) {
    auto& cell = cells_[index(k, mu)];
    pairs_ += static_cast<int>(on) - static_cast<int>(cell);
    cell = on ? 1 : 0;
}

int Configuration::flux_population(int mu) const {
    int n = 0;
    for (int k = 1; k <= K_; ++k) {
        n += occupied(k, mu) ? 1 : 0;
    }
    return n;
}

namespace {

double binomial(int n, int r) {
    double result = 1.0;
    for (int i = 1; i <= r; ++i) {
        result = result * static_cast<double>(n - r + i) / static_cast<double>(i);
    }
    return std::round(result);
}

}  // namespace

std::vector<Configuration> enumerate_configurations(int pair_states, int max_flux, int pairs) {
    if (pair_states < 1 || pair_states > kMaxPairStates) {
        throw SizeError("K must lie in [1, " + std::to_string(kMaxPairStates) + "], got " +
                        std::to_string(pair_states));
    }
    if (max_flux < 0 || max_flux > kMaxFluxIndex) {
        throw SizeError("M must lie in [0, " + std::to_string(kMaxFluxIndex) + "], got " +
                        std::to_string(max_flux));
    }
    const int slots = pair_states * (2 * max_flux + 1);
    if (pairs < 0 || pairs > slots) {
        throw SizeError("pair count must lie in [0, K(2M+1) = " + std::to_string(slots) + "], got " +
                        std::to_string(pairs));
    }
    const double count = binomial(slots, pairs);
    if (count > static_cast<double>(kMaxConfigurations)) {
        throw SizeError("binomial(" + std::to_string(slots) + ", " + std::to_string(pairs) +
                        ") configurations exceeds the enumeration limit of " +
                        std::to_string(kMaxConfigurations));
    }

    // Ascending permutations of a sorted 0/1 mask visit every table in
    // lexicographic order.
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(slots), 0);
    std::fill(mask.end() - pairs, mask.end(), 1);

    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(count));
    const int width = 2 * max_flux + 1;
    do {
        Configuration c(pair_states, max_flux);
        for (int s = 0; s < slots; ++s) {
            if (mask[static_cast<std::size_t>(s)]) {
                c.set(s / width + 1, s % width - max_flux, true);
            }
        }
        out.push_back(std::move(c));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

FluxSector total_flux(const Configuration& c) {
    int F = 0;
    for (int k = 1; k <= c.pair_states(); ++k) {
        for (int mu = -c.max_flux(); mu <= c.max_flux(); ++mu) {
            if (c.occupied(k, mu)) {
                F += mu;
            }
        }
    }
    return FluxSector{F};
}

Energy magnetic_energy(const Configuration& c, double mu_ext, Energy E_L) {
    const double d = static_cast<double>(total_flux(c).F) - mu_ext;
    return E_L * (d * d);
}

Configuration population_shift(const Configuration& c, int nu, int k) {
    if (nu + 1 > c.max_flux() || nu < -c.max_flux()) {
        throw DomainError("flux index nu=" + std::to_string(nu) + " has no slot at nu+1");
    }
    if (!c.occupied(k, nu)) {
        throw DomainError("no occupied slot at (k=" + std::to_string(k) + ", nu=" + std::to_string(nu) + ")");
    }
    if (c.occupied(k, nu + 1)) {
        throw DomainError("no free slot at (k=" + std::to_string(k) + ", nu+1=" +
                          std::to_string(nu + 1) + ")");
    }
    Configuration out = c;
    out.set(k, nu, false);
    out.set(k, nu + 1, true);
    return out;
}

std::vector<Configuration> population_shifts(const Configuration& c, int nu) {
    std::vector<Configuration> out;
    if (nu < -c.max_flux() || nu + 1 > c.max_flux()) {
        return out;
    }
    for (int k = 1; k <= c.pair_states(); ++k) {
        if (c.occupied(k, nu) && !c.occupied(k, nu + 1)) {
            out.push_back(population_shift(c, nu, k));
        }
    }
    return out;
}

Configuration population_shift(const Configuration& c, int nu) {
    if (nu < -c.max_flux() || nu + 1 > c.max_flux()) {
        throw DomainError("flux index nu=" + std::to_string(nu) + " has no slot at nu+1");
    }
    if (c.flux_population(nu) == 0) {
        throw DomainError("no occupied slot at flux index " + std::to_string(nu));
    }
    for (int k = 1; k <= c.pair_states(); ++k) {
        if (c.occupied(k, nu) && !c.occupied(k, nu + 1)) {
            return population_shift(c, nu, k);
        }
    }
    throw DomainError("no free slot at flux index " + std::to_string(nu + 1) +
                      " next to an occupied slot at " + std::to_string(nu));
}

Configuration inverse_population_shift(const Configuration& c, int nu, int k) {
    if (nu < -c.max_flux() || nu + 1 > c.max_flux()) {
        throw DomainError("flux index nu=" + std::to_string(nu) + " has no slot at nu+1");
    }
    if (!c.occupied(k, nu + 1) || c.occupied(k, nu)) {
        throw DomainError("inverse shift needs (k, nu+1) occupied and (k, nu) free");
    }
    Configuration out = c;
    out.set(k, nu + 1, false);
    out.set(k, nu, true);
    return out;
}

ExcitedAmplitudes normalize_excited_state(const ExcitedAmplitudes& amplitudes) {
    const double norm2 = josephson_energy(amplitudes).value;
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw DomainError("cannot normalize an all-zero amplitude table");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    ExcitedAmplitudes out = amplitudes;
    for (auto& [key, value] : out.xi) {
        value *= scale;
    }
    return out;
}

Energy josephson_energy(const ExcitedAmplitudes& amplitudes) {
    double sum = 0.0;
    for (const auto& [key, value] : amplitudes.xi) {
        sum += std::norm(value);
    }
    return Energy{sum};
}

Eigen::Matrix2d TwoLevelHamiltonian::matrix() const {
    Eigen::Matrix2d m;
    m << -0.5 * eps.value, 0.5 * coupling.value,
          0.5 * coupling.value, 0.5 * eps.value;
    return m;
}

TwoLevelHamiltonian two_level_hamiltonian(const qubit::QubitParams& params, qubit::FluxBias bias) {
    const double mu_eff = bias.mu_ext + params.delta;
    return TwoLevelHamiltonian{params.E_L * (1.0 - 2.0 * mu_eff), params.E_J};
}

Frequency two_level_splitting(const TwoLevelHamiltonian& H) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(H.matrix(), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    return phys::energy_to_frequency(Energy{ev(1) - ev(0)});
}

SectorReport analyze_sectors(int pair_states, int max_flux, int pairs, double mu_ext, Energy E_L) {
    const auto configs = enumerate_configurations(pair_states, max_flux, pairs);
    SectorReport report;
    report.configuration_count = configs.size();

    std::vector<Energy> energies;
    energies.reserve(configs.size());
    for (const auto& c : configs) {
        const Energy E = magnetic_energy(c, mu_ext, E_L);
        energies.push_back(E);
        const int F = total_flux(c).F;
        auto [it, inserted] = report.sector_minimum.try_emplace(F, E);
        if (!inserted && E < it->second) {
            it->second = E;
        }
    }

    Energy lowest = report.sector_minimum.begin()->second;
    for (const auto& [F, E] : report.sector_minimum) {
        lowest = std::min(lowest, E);
    }
    const auto ties = [&](Energy E) {
        return std::abs(E.value - lowest.value) <= 1e-12 * std::abs(lowest.value);
    };

    bool have_ground = false;
    for (const auto& [F, E] : report.sector_minimum) {
        if (!ties(E)) {
            continue;
        }
        report.degenerate_sectors.push_back(F);
        if (!have_ground || std::abs(F) < std::abs(report.ground_flux)) {
            report.ground_flux = F;
            have_ground = true;
        }
    }
    report.ground_energy = lowest;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (ties(energies[i])) {
            report.ground_configurations.push_back(configs[i]);
        }
    }
    return report;
}

}  // namespace fluxbcs::micro
