#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fluxbcs/error.hpp"
#include "fluxbcs/fluxqubit.hpp"

using namespace fluxbcs;
using namespace fluxbcs::qubit;
using phys::energy_from_ghz;
using phys::energy_in_ghz;
using phys::in_ghz;

namespace {

Geometry sample_loop() { return Geometry::from_perimeter(20e-6, 450e-9, 80e-9); }

QubitParams fig1_params(double delta = 0.0) {
    return {energy_from_ghz(1500.0), energy_from_ghz(0.66), delta};
}

}  // namespace

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(Geometry::from_perimeter(0.0, 450e-9, 80e-9), DomainError);
    CHECK_THROWS_AS(Geometry::from_perimeter(20e-6, -1.0, 80e-9), DomainError);
    CHECK_THROWS_AS(Geometry::from_perimeter(20e-6, 450e-9, 0.0), DomainError);
    CHECK(Geometry::from_square_side(5e-6, 450e-9, 80e-9).perimeter() == doctest::Approx(20e-6));
    CHECK_FALSE(sample_loop().thickness_warning());
    CHECK(Geometry::from_perimeter(20e-6, 450e-9, 150e-9).thickness_warning());
}

TEST_CASE("params validation") {
    CHECK_NOTHROW(fig1_params().validate());
    CHECK_THROWS_AS((QubitParams{energy_from_ghz(0.0), energy_from_ghz(1.0), 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((QubitParams{energy_from_ghz(1.0), energy_from_ghz(-1.0), 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((QubitParams{energy_from_ghz(1.0), energy_from_ghz(1.0), 0.5}.validate()), DomainError);
}

TEST_CASE("loop energy") {
    const auto g = sample_loop();
    CHECK(energy_in_ghz(loop_energy(3'300'000, g)) == doctest::Approx(1500.0).epsilon(0.02));
    // h / (4 m_e l^2) with l = 20 um, evaluated by hand.
    const double one = 6.62607015e-34 / (4.0 * 9.1093837015e-31 * 4e-10) * 1e-9;
    CHECK(energy_in_ghz(loop_energy(1, g)) == doctest::Approx(one).epsilon(1e-14));
    CHECK(one == doctest::Approx(4.546e-4).epsilon(1e-3));
    CHECK(loop_energy(2000, g).value == doctest::Approx(2.0 * loop_energy(1000, g).value).epsilon(1e-15));
    CHECK_THROWS_AS(loop_energy(0, g), DomainError);
}

TEST_CASE("pair-state count from E_L") {
    const auto g = sample_loop();
    CHECK(k_from_loop_energy(energy_from_ghz(1500.0), g) == doctest::Approx(3.30e6).epsilon(0.02));
    CHECK(k_from_loop_energy(energy_from_ghz(750.0), g) == doctest::Approx(1.65e6).epsilon(0.02));
    CHECK(k_from_loop_energy(energy_from_ghz(750.0), g) ==
          doctest::Approx(0.5 * k_from_loop_energy(energy_from_ghz(1500.0), g)).epsilon(1e-15));
    for (std::uint64_t K : {1ULL, 17ULL, 3'300'000ULL, 123'456'789ULL}) {
        CHECK(k_from_loop_energy(loop_energy(K, g), g) == doctest::Approx(static_cast<double>(K)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(k_from_loop_energy(energy_from_ghz(0.0), g), DomainError);
}

TEST_CASE("sample volume and Cooper-pair density") {
    CHECK(sample_volume(sample_loop()) * 1e6 == doctest::Approx(0.72e-12).epsilon(1e-12));
    CHECK(sample_volume(Geometry::from_perimeter(10e-6, 450e-9, 80e-9)) * 1e6 ==
          doctest::Approx(0.36e-12).epsilon(1e-12));

    CHECK(cooper_pair_density(3.3e6, 0.72e-18) == doctest::Approx(2.29e18).epsilon(3e-3));
    CHECK(cooper_pair_density(2.0, 1e-6) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cooper_pair_density(3.3e6, 1.44e-18) == doctest::Approx(0.5 * cooper_pair_density(3.3e6, 0.72e-18)));
    CHECK_THROWS_AS(cooper_pair_density(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(cooper_pair_density(1.0, 0.0), DomainError);
}

TEST_CASE("inversion chain is consistent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> kdist(1, 1'000'000'000);
    std::uniform_real_distribution<double> len(1e-6, 1e-4);
    for (int i = 0; i < 200; ++i) {
        const auto g = Geometry::from_perimeter(len(rng), 450e-9, 80e-9);
        const auto K = kdist(rng);
        const double chain = cooper_pair_density(k_from_loop_energy(loop_energy(K, g), g), sample_volume(g));
        const double direct = static_cast<double>(K) / (2.0 * sample_volume(g) * 1e6);
        REQUIRE(chain == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("qubit frequency") {
    CHECK(in_ghz(qubit_frequency(fig1_params(), FluxBias{0.5})) == doctest::Approx(0.66).epsilon(1e-14));
    CHECK(in_ghz(qubit_frequency(fig1_params(), FluxBias{0.505})) ==
          doctest::Approx(std::sqrt(15.0 * 15.0 + 0.66 * 0.66)).epsilon(1e-9));
    const QubitParams crossing{energy_from_ghz(1500.0), energy_from_ghz(0.0), 0.0};
    CHECK(qubit_frequency(crossing, FluxBias{0.5}).value == 0.0);
    // delta shifts the bias
    CHECK(in_ghz(qubit_frequency(fig1_params(0.002), FluxBias{0.498})) == doctest::Approx(0.66).epsilon(1e-9));
}

TEST_CASE("anticrossing floor, reflection symmetry and linear asymptote") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> el(10.0, 5000.0), ej(0.01, 5.0), mu(-2.0, 3.0), x(1e-3, 0.2),
        dl(-0.1, 0.1);
    for (int i = 0; i < 2000; ++i) {
        const QubitParams p{energy_from_ghz(el(rng)), energy_from_ghz(ej(rng)), dl(rng)};
        const double floor_ghz = energy_in_ghz(p.E_J);
        const double m = mu(rng);
        REQUIRE(in_ghz(qubit_frequency(p, FluxBias{m})) >= floor_ghz * (1.0 - 1e-15));

        const QubitParams centered{p.E_L, p.E_J, 0.0};
        const double off = x(rng);
        const double up = qubit_frequency(centered, FluxBias{0.5 + off}).value;
        const double down = qubit_frequency(centered, FluxBias{0.5 - off}).value;
        REQUIRE(std::abs(up - down) <= 1e-12 * up);

        const double s = std::abs(1.0 - 2.0 * (m + p.delta));
        const double a = p.E_L.value * s;
        if (a > 100.0 * p.E_J.value) {
            const double excess = qubit_frequency(p, FluxBias{m}).value * 6.62607015e-34 - a;
            REQUIRE(excess >= -1e-15 * a);
            REQUIRE(excess <= p.E_J.value * p.E_J.value / (2.0 * a) * (1.0 + 1e-9) + 1e-15 * a);
        }
    }
    CHECK(in_ghz(qubit_frequency(fig1_params(), FluxBias{0.5})) == doctest::Approx(0.66).epsilon(1e-15));
}

TEST_CASE("spectrum curve") {
    const auto curve = spectrum_curve(fig1_params(), 0.495, 0.505, 1e-4);
    REQUIRE(curve.size() == 101);
    CHECK(curve.x_label() == "mu_ext");
    CHECK(curve.y_label() == "f_ghz");
    CHECK(curve[0].x == 0.495);
    CHECK(curve[100].x == 0.505);

    std::size_t argmin = 0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i].y < curve[argmin].y) argmin = i;
    }
    CHECK(argmin == 50);
    CHECK(curve[50].x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(curve[50].y == doctest::Approx(0.66).epsilon(1e-9));
    for (std::size_t i = 1; i <= 50; ++i) {
        CHECK(curve[i].y < curve[i - 1].y);
        CHECK(curve[100 - i].y < curve[100 - i + 1].y);
        CHECK(curve[50 - i].y == doctest::Approx(curve[50 + i].y).epsilon(1e-9));
    }

    // wing slope from the samples approaches 2 E_L/h
    const auto wide = spectrum_curve(fig1_params(), 0.3, 0.7, 1e-3);
    const double slope = (wide[1].y - wide[0].y) / (wide[1].x - wide[0].x);
    CHECK(std::abs(slope) == doctest::Approx(3000.0).epsilon(1e-6));

    const auto shifted = spectrum_curve(fig1_params(0.002), 0.495, 0.505, 1e-4);
    std::size_t shifted_min = 0;
    for (std::size_t i = 1; i < shifted.size(); ++i) {
        if (shifted[i].y < shifted[shifted_min].y) shifted_min = i;
    }
    CHECK(shifted[shifted_min].x == doctest::Approx(0.498).epsilon(1e-12));

    CHECK_THROWS_AS(spectrum_curve(fig1_params(), 0.505, 0.495, 1e-4), DomainError);
    CHECK_THROWS_AS(spectrum_curve(fig1_params(), 0.5, 0.5, 1e-4), DomainError);
    CHECK_THROWS_AS(spectrum_curve(fig1_params(), 0.495, 0.505, 0.1), DomainError);
    CHECK_THROWS_AS(spectrum_curve(fig1_params(), 0.495, 0.505, 0.0), DomainError);
}

TEST_CASE("symmetric range with zero offset is symmetric to 1e-12") {
    const auto curve = spectrum_curve(fig1_params(), 0.25, 0.75, 1e-3);
    const std::size_t n = curve.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        REQUIRE(curve[i].y == doctest::Approx(curve[n - 1 - i].y).epsilon(1e-12));
    }
}
