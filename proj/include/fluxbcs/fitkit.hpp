#pragma once

// Damped Gauss-Newton fit of (E_L, E_J, delta) to resonance-frequency data,
// and seeded synthetic data for checking the fitter against known truth.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "fluxbcs/error.hpp"
#include "fluxbcs/fluxqubit.hpp"

namespace fluxbcs::fit {

using phys::Frequency;
using qubit::QubitParams;

class FitError : public DomainError {
public:
    using DomainError::DomainError;
};

struct ResonancePoint {
    double mu_ext = 0.0;
    Frequency f;
    /// Measurement uncertainty; weight 1/sigma^2. Either every point in a
    /// data set carries one or none does.
    std::optional<Frequency> sigma;
};

struct FitOptions {
    int max_iterations = 200;
    /// Converged once the largest step component, expressed as a frequency,
    /// is below this fraction of E_L/h.
    double step_tolerance = 1e-10;
    /// ... or once an accepted step lowers the cost by less than this fraction.
    double cost_tolerance = 1e-12;
};

struct FitResult {
    QubitParams params;
    Frequency residual_rms;
    int iterations = 0;
    bool converged = false;
    /// Gauss-Newton covariance of (E_L/h [Hz], E_J/h [Hz], delta). Scaled by
    /// the residual variance when the data carry no sigma.
    Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
    /// Cost after the initial guess and after every accepted step.
    std::vector<double> cost_history;
};

/// Partial derivatives of the model frequency (Hz) with respect to
/// E_L/h (Hz), E_J/h (Hz) and delta.
std::array<double, 3> model_gradient(const QubitParams& params, double mu_ext);

/// Starting point from the data shape: E_J/h = min f, delta = 0.5 - argmin mu,
/// E_L/h from the two outermost points.
QubitParams initial_guess(std::span<const ResonancePoint> data);

/// Minimizes sum w_i (f_model(mu_i) - f_i)^2. Throws FitError on fewer than
/// four points, a single bias value, or data that do not bracket the
/// minimum. Non-convergence is reported through FitResult::converged.
FitResult fit_spectrum(std::span<const ResonancePoint> data,
                       std::optional<QubitParams> initial = std::nullopt,
                       const FitOptions& options = {});

/// f_i - f_model(mu_i), in input order.
std::vector<Frequency> residuals(std::span<const ResonancePoint> data, const QubitParams& params);

/// n evenly spaced biases over [mu_min, mu_max] (both ends included) with
/// f = |f_model + N(0, noise_sigma)| drawn from mt19937_64(seed). The
/// points carry no sigma.
std::vector<ResonancePoint> synthesize_data(const QubitParams& params, double mu_min, double mu_max,
                                            std::size_t n_points, Frequency noise_sigma,
                                            std::uint64_t seed);

}  // namespace fluxbcs::fit
