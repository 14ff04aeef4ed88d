#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fluxbcs/bcs.hpp"
#include "fluxbcs/error.hpp"
#include "fluxbcs/materials.hpp"

using namespace fluxbcs;
using namespace fluxbcs::bcs;
using phys::energy_to_kelvin;
using phys::kelvin;
using phys::kelvin_to_energy;

namespace {

Energy kB(double K) { return kelvin_to_energy(kelvin(K)); }

}  // namespace

// Reference values below were evaluated with mpmath at 30 digits from the
// closed forms and the pinned constants.

TEST_CASE("gap from T_c") {
    CHECK(energy_to_kelvin(gap_from_tc(kelvin(1.2))).value == doctest::Approx(2.112).epsilon(1e-14));
    CHECK(energy_to_kelvin(gap_from_tc(kelvin(9.8))).value == doctest::Approx(17.248).epsilon(1e-14));
    CHECK(gap_from_tc(kelvin(1e-300)).value < 1e-320);
    CHECK_THROWS_AS(gap_from_tc(kelvin(0.0)), DomainError);
}

TEST_CASE("T_c from coupling") {
    CHECK(tc_from_coupling(kB(428.0), kB(72.0)).value == doctest::Approx(1.26731849898124531).epsilon(1e-13));
    CHECK(tc_from_coupling(kB(275.0), kB(80.0)).value == doctest::Approx(9.99937471210470871).epsilon(1e-13));
    CHECK(tc_from_coupling(kB(275.0), kB(80.0)).value == doctest::Approx(9.8).epsilon(0.03));
    // g >> cutoff: sinh(x) ~ x, so k_B T_c -> 1.13 g / 2
    CHECK(tc_from_coupling(kB(1.0), kB(1e6)).value == doctest::Approx(1.13e6 / 2.0).epsilon(1e-9));
    CHECK_THROWS_AS(tc_from_coupling(kB(0.0), kB(1.0)), DomainError);
    CHECK_THROWS_AS(tc_from_coupling(kB(1.0), kB(-1.0)), DomainError);
}

TEST_CASE("overflow-safe branch") {
    for (double x : {31.0, 100.0, 300.0, 700.0}) {
        const double t = tc_from_coupling(kB(x), kB(1.0)).value;
        REQUIRE(std::isfinite(t));
        REQUIRE(t > 0.0);
    }
    CHECK(std::isinf(std::sinh(720.0)));
    // the two branches agree at the switch point
    const double exact = 1.13 * kSinhSwitch / (2.0 * std::sinh(kSinhSwitch));
    const double asymptotic = 1.13 * kSinhSwitch * std::exp(-kSinhSwitch);
    CHECK(std::abs(exact - asymptotic) <= 1e-12 * exact);
    const double below = tc_from_coupling(kB(kSinhSwitch), kB(1.0 + 1e-12)).value;
    const double above = tc_from_coupling(kB(kSinhSwitch), kB(1.0 - 1e-12)).value;
    CHECK(above == doctest::Approx(below).epsilon(1e-9));
}

TEST_CASE("T_c monotone in g and in the cutoff") {
    for (double cutoff : {1.0, 10.0, 428.0}) {
        double prev = 0.0;
        for (double g = cutoff / 500.0; g < 20.0 * cutoff; g *= 1.05) {
            const double t = tc_from_coupling(kB(cutoff), kB(g)).value;
            REQUIRE(t > prev);
            prev = t;
        }
    }
    for (double ratio : {0.05, 0.2, 1.0, 5.0}) {
        double prev = 0.0;
        for (double cutoff = 1.0; cutoff < 1000.0; cutoff *= 1.3) {
            const double t = tc_from_coupling(kB(cutoff), kB(cutoff * ratio)).value;
            REQUIRE(t > prev);
            prev = t;
        }
    }
}

TEST_CASE("strong-coupling T_c") {
    CHECK(tc_strong_coupling(kB(72.0)).value == doctest::Approx(36.0).epsilon(1e-15));
    CHECK(tc_strong_coupling(kB(80.0)).value == doctest::Approx(40.0).epsilon(1e-15));
    CHECK(tc_strong_coupling(kB(1e-300)).value < 1e-299);
    CHECK_THROWS_AS(tc_strong_coupling(kB(0.0)), DomainError);
}

TEST_CASE("coupling inversion") {
    const double g_al = energy_to_kelvin(invert_coupling(kelvin(1.2), kB(428.0))).value;
    const double g_nb = energy_to_kelvin(invert_coupling(kelvin(9.8), kB(275.0))).value;
    CHECK(g_al == doctest::Approx(71.3449217970525276).epsilon(1e-12));
    CHECK(g_nb == doctest::Approx(79.5349508310058793).epsilon(1e-12));
    CHECK(std::abs(g_al - 72.0) <= 1.0);
    CHECK(std::abs(g_nb - 80.0) <= 1.0);

    CHECK_THROWS_AS(invert_coupling(kelvin(500.0), kB(428.0)), DomainError);
    CHECK(max_invertible_tc(kB(428.0)).value == doctest::Approx(205.769021770832706).epsilon(1e-12));
    CHECK_NOTHROW(invert_coupling(kelvin(205.0), kB(428.0)));
    CHECK_THROWS_AS(invert_coupling(kelvin(0.0), kB(428.0)), DomainError);
}

TEST_CASE("inverse pairs round-trip on random inputs") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> log_cutoff(-1.0, 3.5), frac(1e-6, 1.0), log_k(0.0, 12.0),
        log_n0(20.0, 35.0);
    for (int i = 0; i < 1000; ++i) {
        const Energy cutoff = kB(std::pow(10.0, log_cutoff(rng)));
        const auto T = kelvin(frac(rng) * max_invertible_tc(cutoff).value);
        const Energy g = invert_coupling(T, cutoff);
        REQUIRE(tc_from_coupling(cutoff, g).value == doctest::Approx(T.value).epsilon(1e-10));

        const double K = std::pow(10.0, log_k(rng));
        const double n0 = std::pow(10.0, log_n0(rng));
        REQUIRE(k_from_cutoff(cutoff_from_k(K, n0), n0) == doctest::Approx(K).epsilon(1e-12));
        REQUIRE(cutoff_from_k(k_from_cutoff(cutoff, n0), n0).value == doctest::Approx(cutoff.value).epsilon(1e-12));
    }
}

TEST_CASE("density of states") {
    const double n0 = density_of_states(18.06e22, 0.72e-18);
    CHECK(n0 == doctest::Approx(5.22459155644747874e28).epsilon(1e-12));
    CHECK(density_of_states(18.06e22, 1.44e-18) == doctest::Approx(2.0 * n0).epsilon(1e-15));
    CHECK(density_of_states(8.0 * 18.06e22, 0.72e-18) == doctest::Approx(2.0 * n0).epsilon(1e-14));
    CHECK_THROWS_AS(density_of_states(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(density_of_states(1.0, 0.0), DomainError);
}

TEST_CASE("cutoff from K and back") {
    const double n0 = 5.22459155644747874e28;
    const Energy cutoff = cutoff_from_k(3.3e6, n0);
    CHECK(energy_to_kelvin(cutoff).value / 2.0 == doctest::Approx(1.14371632905137772).epsilon(1e-12));
    CHECK(cutoff_from_k(6.6e6, n0).value == doctest::Approx(2.0 * cutoff.value).epsilon(1e-15));
    CHECK(k_from_cutoff(cutoff, n0) == doctest::Approx(3.3e6).epsilon(1e-15));
    CHECK(k_from_cutoff(kB(2.4), 5.22e28) == doctest::Approx(3459354.1344).epsilon(1e-12));
    CHECK(k_from_cutoff(kB(2.4), 1e-300) < 1e-270);
    CHECK_THROWS_AS(cutoff_from_k(-1.0, n0), DomainError);
    CHECK_THROWS_AS(k_from_cutoff(kB(1.0), 0.0), DomainError);
}

TEST_CASE("thermally active electrons") {
    CHECK(thermally_active_electrons(kelvin(0.0), 5.22e28) == 0.0);
    CHECK(thermally_active_electrons(kelvin(1.2), 5.22e28) == doctest::Approx(3459354.1344).epsilon(1e-12));
    const auto params = strong_coupling_params(kelvin(1.2));
    CHECK(thermally_active_electrons(kelvin(1.2), 5.22e28) == k_from_cutoff(params.omega_c, 5.22e28));
}

TEST_CASE("strong-coupling identification against the BCS T_c law") {
    const auto p = strong_coupling_params(kelvin(1.2));
    CHECK(p.omega_c == p.g);
    CHECK(p.g == p.Delta0);
    const double ratio = tc_from_coupling(p.omega_c, p.g).value / p.T_c.value;
    CHECK(std::abs(ratio - 0.961) <= 1e-3);
    CHECK(ratio == doctest::Approx(0.961537484910433255).epsilon(1e-13));
}

TEST_CASE("T_c curves") {
    const Energy ED = kB(428.0);
    const auto strong = tc_curve(ED, Hypothesis::StrongCoupling, 0.01, 1.0, 0.01);
    const auto debye = tc_curve(ED, Hypothesis::DebyeCutoff, 0.01, 1.0, 0.01);
    REQUIRE(strong.size() == 100);
    REQUIRE(debye.size() == 100);
    CHECK(strong.y_label() == "kbTc_over_ED_eq10");
    CHECK(debye.y_label() == "kbTc_over_ED_eq7");
    for (std::size_t i = 0; i < strong.size(); ++i) {
        REQUIRE(strong[i].y == strong[i].x / 2.0);
        REQUIRE(debye[i].x == strong[i].x);
        REQUIRE(std::isfinite(debye[i].y));
        REQUIRE(debye[i].y > 0.0);
        REQUIRE(debye[i].y < strong[i].y);
        if (i > 0) {
            REQUIRE(debye[i].y > debye[i - 1].y);
            REQUIRE(strong[i].y > strong[i - 1].y);
        }
    }
    CHECK(debye[49].y == doctest::Approx(0.155782119096057498).epsilon(1e-12));
    CHECK(debye[99].y == doctest::Approx(0.480768742455216628).epsilon(1e-12));

    CHECK_THROWS_AS(tc_curve(ED, Hypothesis::StrongCoupling, 0.0, 1.0, 0.01), DomainError);
    CHECK_THROWS_AS(tc_curve(ED, Hypothesis::StrongCoupling, 1.0, 0.5, 0.01), DomainError);
    CHECK_THROWS_AS(tc_curve(ED, Hypothesis::DebyeCutoff, 0.1, 1.0, -0.01), DomainError);
}

TEST_CASE("material registry") {
    const auto reg = MaterialRegistry::builtin();
    const auto& al = reg.get("Al");
    CHECK(al.require_kappa_el() == 18.06e22);
    CHECK(al.T_c.value == 1.2);
    CHECK(al.Theta_D.value == 428.0);
    const auto& nb = reg.get("Nb");
    CHECK_FALSE(nb.kappa_el_cm3.has_value());
    CHECK_THROWS_WITH_AS(nb.require_kappa_el(), doctest::Contains("Nb"), DomainError);
    CHECK_THROWS_AS(reg.get("Pb"), DomainError);

    const auto parsed = MaterialRegistry::from_json(R"({"materials": [
        {"name": "X", "tc_K": 2.0, "theta_d_K": 100.0, "kappa_el_cm3": 1e22}]})");
    CHECK(parsed.get("X").require_kappa_el() == 1e22);
    CHECK_THROWS_AS(MaterialRegistry::from_json("{"), ParseError);
    CHECK_THROWS_AS(MaterialRegistry::from_json(R"({"materials": [{"name": "X"}]})"), ParseError);
    CHECK_THROWS_AS(MaterialRegistry::from_json(R"({"materials": [{"name": "X", "tc_K": 5, "theta_d_K": 4}]})"),
                    DomainError);
}
