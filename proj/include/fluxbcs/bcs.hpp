#pragma once

// BCS relations between gap, critical temperature, coupling and cutoff;
// the free-electron density of states; and the two cutoff hypotheses
// (cutoff ~ coupling ~ 2 k_B T_c, versus cutoff = Debye energy).

#include <optional>
#include <string>

#include "fluxbcs/curve.hpp"
#include "fluxbcs/physcore.hpp"

namespace fluxbcs::bcs {

using phys::Energy;
using phys::Temperature;

/// Prefactors of the weak-coupling BCS relations.
inline constexpr double kGapRatio = 1.76;
inline constexpr double kTcPrefactor = 1.13;

/// Above this value of cutoff/coupling the 1/sinh factor is evaluated as
/// exp(-x); 2 sinh(x) and e^x agree to e^{-2x} ~ 1e-26 there.
inline constexpr double kSinhSwitch = 30.0;

struct Material {
    std::string name;
    std::optional<double> kappa_el_cm3;  // electrons per cm^3
    Temperature T_c;
    Temperature Theta_D;

    /// Throws DomainError unless every present field is positive and Theta_D > T_c.
    void validate() const;
    /// Electron density or a DomainError naming the material.
    double require_kappa_el() const;
};

struct BcsParams {
    Energy omega_c;  // hbar omega_c
    Energy g;
    Energy Delta0;
    Temperature T_c;
};

enum class Hypothesis {
    StrongCoupling,  // hbar omega_c ~ g ~ Delta(0) ~ 2 k_B T_c
    DebyeCutoff,     // hbar omega_c = hbar omega_D >> g
};

/// Parameter set implied by the strong-coupling identification for a given T_c.
BcsParams strong_coupling_params(Temperature T_c);

/// Delta(0) = 1.76 k_B T_c.
Energy gap_from_tc(Temperature T_c);

/// k_B T_c = 1.13 hbar omega_c / (2 sinh(hbar omega_c / g)), overflow-safe.
Temperature tc_from_coupling(Energy omega_c, Energy g);

/// k_B T_c = g / 2.
Temperature tc_strong_coupling(Energy g);

/// g = hbar omega_c / asinh(1.13 hbar omega_c / (2 k_B T_c)).
/// T_c is reachable only with g <= hbar omega_c, i.e.
/// k_B T_c <= 1.13 hbar omega_c / (2 sinh 1); beyond that a DomainError is thrown.
Energy invert_coupling(Temperature T_c, Energy omega_c);

/// Largest T_c invert_coupling accepts for a given cutoff.
Temperature max_invertible_tc(Energy omega_c);

/// N(0) = V m / (2 pi^2 hbar^2) (3 pi^2 kappa_el)^{1/3}, spin excluded.
/// kappa_el per cm^3, volume in m^3, result in states per joule.
double density_of_states(double kappa_el_cm3, double volume_m3);

/// hbar omega_c = K / (2 N(0)).
Energy cutoff_from_k(double pair_states, double n0_per_joule);

/// K = 2 hbar omega_c N(0).
double k_from_cutoff(Energy omega_c, double n0_per_joule);

/// 4 k_B T N(0).
double thermally_active_electrons(Temperature T, double n0_per_joule);

/// k_B T_c / E_D against g / E_D on sample_grid(g_min, g_max, step), both
/// axes in units of E_D = hbar omega_D.
CurveSeries tc_curve(Energy omega_D, Hypothesis hypothesis, double g_min, double g_max, double step);

/// Same curve evaluated on caller-supplied abscissae (units of E_D).
double reduced_tc(Hypothesis hypothesis, double g_over_ED);

}  // namespace fluxbcs::bcs
