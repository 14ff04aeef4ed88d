#include "fluxbcs/bcs.hpp"

#include <cmath>
#include <numbers>

#include "fluxbcs/error.hpp"

namespace fluxbcs::bcs {

using namespace phys::constants;

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

// 1 / (2 sinh x) for x > 0.
double half_csch(double x) {
    if (x > kSinhSwitch) {
        return std::exp(-x);
    }
    return 0.5 / std::sinh(x);
}

// Returns k_B T_c as an energy in the same units as the inputs.
double tc_energy(double cutoff, double coupling) {
    return kTcPrefactor * cutoff * half_csch(cutoff / coupling);
}

}  // namespace

void Material::validate() const {
    if (name.empty()) {
        throw DomainError("material name must be non-empty");
    }
    if (kappa_el_cm3) {
        require_positive(*kappa_el_cm3, "electron density");
    }
    require_positive(T_c.value, "critical temperature");
    require_positive(Theta_D.value, "Debye temperature");
    if (!(Theta_D > T_c)) {
        throw DomainError("material " + name + ": Debye temperature must exceed T_c");
    }
}

double Material::require_kappa_el() const {
    if (!kappa_el_cm3) {
        throw DomainError("material " + name + " has no electron density (kappa_el_cm3)");
    }
    return *kappa_el_cm3;
}

BcsParams strong_coupling_params(Temperature T_c) {
    require_positive(T_c.value, "critical temperature");
    const Energy two_kT = phys::kelvin_to_energy(T_c) * 2.0;
    return BcsParams{two_kT, two_kT, two_kT, T_c};
}

Energy gap_from_tc(Temperature T_c) {
    require_positive(T_c.value, "critical temperature");
    return phys::kelvin_to_energy(T_c) * kGapRatio;
}

Temperature tc_from_coupling(Energy omega_c, Energy g) {
    require_positive(omega_c.value, "cutoff energy");
    require_positive(g.value, "coupling");
    // Convert before applying exp(-x) so that the result stays normal for x up to ~700.
    const double ratio = omega_c / g;
    return phys::energy_to_kelvin(omega_c) * (kTcPrefactor * half_csch(ratio));
}

Temperature tc_strong_coupling(Energy g) {
    require_positive(g.value, "coupling");
    return phys::energy_to_kelvin(g * 0.5);
}

Temperature max_invertible_tc(Energy omega_c) {
    require_positive(omega_c.value, "cutoff energy");
    return phys::energy_to_kelvin(Energy{tc_energy(omega_c.value, omega_c.value)});
}

Energy invert_coupling(Temperature T_c, Energy omega_c) {
    require_positive(T_c.value, "critical temperature");
    require_positive(omega_c.value, "cutoff energy");
    const double arg = kTcPrefactor * omega_c.value / (2.0 * phys::kelvin_to_energy(T_c).value);
    if (!(arg >= std::sinh(1.0))) {
        throw DomainError("T_c = " + std::to_string(T_c.value) +
                          " K is unreachable: it would need a coupling above the cutoff (max T_c " +
                          std::to_string(max_invertible_tc(omega_c).value) + " K)");
    }
    return Energy{omega_c.value / std::asinh(arg)};
}

double density_of_states(double kappa_el_cm3, double volume_m3) {
    require_positive(kappa_el_cm3, "electron density");
    require_positive(volume_m3, "volume");
    constexpr double pi = std::numbers::pi;
    const double kappa_m3 = kappa_el_cm3 * 1e6;
    const double k_fermi = std::cbrt(3.0 * pi * pi * kappa_m3);
    return volume_m3 * m_e / (2.0 * pi * pi * hbar * hbar) * k_fermi;
}

Energy cutoff_from_k(double pair_states, double n0_per_joule) {
    require_positive(pair_states, "pair-state count");
    require_positive(n0_per_joule, "density of states");
    return Energy{pair_states / (2.0 * n0_per_joule)};
}

double k_from_cutoff(Energy omega_c, double n0_per_joule) {
    require_positive(omega_c.value, "cutoff energy");
    require_positive(n0_per_joule, "density of states");
    return 2.0 * omega_c.value * n0_per_joule;
}

double thermally_active_electrons(Temperature T, double n0_per_joule) {
    // (4 E) N0 is bit-identical to (2 (2 E)) N0 in k_from_cutoff.
    return 4.0 * phys::kelvin_to_energy(T).value * n0_per_joule;
}

double reduced_tc(Hypothesis hypothesis, double g_over_ED) {
    require_positive(g_over_ED, "g / E_D");
    switch (hypothesis) {
        case Hypothesis::StrongCoupling:
            return 0.5 * g_over_ED;
        case Hypothesis::DebyeCutoff:
            return tc_energy(1.0, g_over_ED);
    }
    throw DomainError("unknown hypothesis");
}

CurveSeries tc_curve(Energy omega_D, Hypothesis hypothesis, double g_min, double g_max, double step) {
    require_positive(omega_D.value, "Debye energy");
    if (!(g_min > 0.0)) {
        throw DomainError("coupling range must start above zero");
    }
    const auto grid = sample_grid(g_min, g_max, step);
    std::vector<CurveSeries::Point> pts;
    pts.reserve(grid.size());
    for (double x : grid) {
        pts.push_back({x, reduced_tc(hypothesis, x)});
    }
    return CurveSeries("g_over_ED",
                       hypothesis == Hypothesis::StrongCoupling ? "kbTc_over_ED_eq10" : "kbTc_over_ED_eq7",
                       std::move(pts));
}

}  // namespace fluxbcs::bcs
