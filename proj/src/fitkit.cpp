#include "fluxbcs/fitkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace fluxbcs::fit {

namespace {

// The solver works in GHz so that the normal matrix is well scaled.
constexpr double kHzPerUnit = 1e9;

struct Scaled {
    double el;     // E_L/h, GHz
    double ej;     // E_J/h, GHz
    double delta;
};

Scaled to_scaled(const QubitParams& p) {
    return {phys::energy_in_ghz(p.E_L), phys::energy_in_ghz(p.E_J), p.delta};
}

QubitParams from_scaled(const Scaled& s) {
    return {phys::energy_from_ghz(s.el), phys::energy_from_ghz(s.ej), s.delta};
}

bool in_bounds(const Scaled& s) {
    return s.el > 0.0 && s.ej >= 0.0 && std::abs(s.delta) < 0.5 && std::isfinite(s.el) &&
           std::isfinite(s.ej);
}

double model(const Scaled& p, double mu) {
    return std::hypot(p.el * (1.0 - 2.0 * (mu + p.delta)), p.ej);
}

// d f / d(el, ej, delta); f == 0 only when both terms vanish, where the
// E_J direction is taken as the one-sided derivative of |E_J|.
Eigen::RowVector3d gradient(const Scaled& p, double mu) {
    const double s = 1.0 - 2.0 * (mu + p.delta);
    const double f = model(p, mu);
    if (f == 0.0) {
        return {std::abs(s), 1.0, 0.0};
    }
    return {p.el * s * s / f, p.ej / f, -2.0 * p.el * p.el * s / f};
}

struct Problem {
    std::vector<double> mu;
    std::vector<double> f;       // GHz
    std::vector<double> weight;  // 1/sigma^2 in GHz^-2, or 1
    bool has_sigma = false;

    double cost(const Scaled& p) const {
        double c = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const double r = model(p, mu[i]) - f[i];
            c += weight[i] * r * r;
        }
        return c;
    }

    // Normal matrix J^T W J and gradient J^T W r.
    void linearize(const Scaled& p, Eigen::Matrix3d& A, Eigen::Vector3d& b) const {
        A.setZero();
        b.setZero();
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const Eigen::RowVector3d J = gradient(p, mu[i]);
            const double r = model(p, mu[i]) - f[i];
            A.noalias() += weight[i] * J.transpose() * J;
            b.noalias() += weight[i] * r * J.transpose();
        }
    }
};

void check_point(const ResonancePoint& pt, std::size_t i) {
    const auto where = " (point " + std::to_string(i) + ")";
    if (!std::isfinite(pt.mu_ext) || !std::isfinite(pt.f.value)) {
        throw FitError("non-finite resonance data" + where);
    }
    if (pt.f.value < 0.0) {
        throw FitError("resonance frequency must be non-negative" + where);
    }
    if (pt.sigma && !(pt.sigma->value > 0.0 && std::isfinite(pt.sigma->value))) {
        throw FitError("sigma must be positive" + where);
    }
}

void check_data(std::span<const ResonancePoint> data) {
    if (data.size() < 4) {
        throw FitError("insufficient data: need at least 4 points, got " + std::to_string(data.size()));
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        check_point(data[i], i);
    }
    const bool first_sigma = data.front().sigma.has_value();
    for (const auto& pt : data) {
        if (pt.sigma.has_value() != first_sigma) {
            throw FitError("sigma must be given for all points or for none");
        }
    }
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end(),
        [](const ResonancePoint& a, const ResonancePoint& b) { return a.mu_ext < b.mu_ext; });
    if (lo->mu_ext == hi->mu_ext) {
        throw FitError("degenerate data: all points share one bias value");
    }
    const auto min_it = std::min_element(data.begin(), data.end(),
        [](const ResonancePoint& a, const ResonancePoint& b) { return a.f < b.f; });
    const bool left = std::any_of(data.begin(), data.end(),
        [&](const ResonancePoint& p) { return p.mu_ext < min_it->mu_ext; });
    const bool right = std::any_of(data.begin(), data.end(),
        [&](const ResonancePoint& p) { return p.mu_ext > min_it->mu_ext; });
    if (!left || !right) {
        throw FitError("degenerate data: points must lie on both sides of the frequency minimum");
    }
}

// Moore-Penrose inverse of a symmetric PSD matrix.
Eigen::Matrix3d pseudo_inverse(const Eigen::Matrix3d& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(A);
    const auto& ev = es.eigenvalues();
    const double cutoff = 1e-14 * std::max(std::abs(ev.maxCoeff()), std::numeric_limits<double>::min());
    Eigen::Vector3d inv = Eigen::Vector3d::Zero();
    for (int i = 0; i < 3; ++i) {
        if (ev(i) > cutoff) {
            inv(i) = 1.0 / ev(i);
        }
    }
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

std::array<double, 3> model_gradient(const QubitParams& params, double mu_ext) {
    const Eigen::RowVector3d g = gradient(to_scaled(params), mu_ext);
    // GHz/GHz for the two energies is dimensionless; delta needs Hz.
    return {g(0), g(1), g(2) * kHzPerUnit};
}

QubitParams initial_guess(std::span<const ResonancePoint> data) {
    check_data(data);
    const auto by_mu = [](const ResonancePoint& a, const ResonancePoint& b) { return a.mu_ext < b.mu_ext; };
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end(), by_mu);
    const auto min_it = std::min_element(data.begin(), data.end(),
        [](const ResonancePoint& a, const ResonancePoint& b) { return a.f < b.f; });

    Scaled s;
    s.ej = phys::in_ghz(min_it->f);
    s.delta = std::clamp(0.5 - min_it->mu_ext, -0.499, 0.499);
    const double arm = std::abs(1.0 - 2.0 * (lo->mu_ext + s.delta)) + std::abs(1.0 - 2.0 * (hi->mu_ext + s.delta));
    s.el = (phys::in_ghz(lo->f) + phys::in_ghz(hi->f)) / arm;
    if (!(s.el > 0.0) || !std::isfinite(s.el)) {
        throw FitError("cannot form an initial E_L from the data");
    }
    return from_scaled(s);
}

FitResult fit_spectrum(std::span<const ResonancePoint> data, std::optional<QubitParams> initial,
                       const FitOptions& options) {
    check_data(data);
    QubitParams start = initial ? *initial : initial_guess(data);
    start.validate();

    Problem prob;
    prob.has_sigma = data.front().sigma.has_value();
    for (const auto& pt : data) {
        prob.mu.push_back(pt.mu_ext);
        prob.f.push_back(phys::in_ghz(pt.f));
        const double sig = pt.sigma ? phys::in_ghz(*pt.sigma) : 1.0;
        prob.weight.push_back(1.0 / (sig * sig));
    }

    FitResult result;
    Scaled p = to_scaled(start);
    double cost = prob.cost(p);
    result.cost_history.push_back(cost);
    double lambda = 1e-3;

    // Step size measured as a frequency: delta moves f by 2 E_L per unit.
    const auto step_small = [&](const Eigen::Vector3d& d, const Scaled& at) {
        const double biggest = std::max({std::abs(d(0)), std::abs(d(1)), 2.0 * at.el * std::abs(d(2))});
        return biggest <= options.step_tolerance * at.el;
    };

    Eigen::Matrix3d A;
    Eigen::Vector3d b;
    int it = 0;
    bool relinearize = true;
    while (it < options.max_iterations && !result.converged) {
        ++it;
        if (cost == 0.0) {
            result.converged = true;
            break;
        }
        if (relinearize) {
            prob.linearize(p, A, b);
            relinearize = false;
        }
        Eigen::Matrix3d damped = A;
        const double diag_floor = 1e-12 * A.diagonal().maxCoeff();
        for (int i = 0; i < 3; ++i) {
            damped(i, i) += lambda * std::max(A(i, i), diag_floor);
        }
        const Eigen::Vector3d step = damped.ldlt().solve(-b);
        if (!step.allFinite()) {
            lambda *= 10.0;
            continue;
        }

        // Halve until the proposal is back inside the physical domain.
        double t = 1.0;
        Scaled trial{p.el + step(0), p.ej + step(1), p.delta + step(2)};
        for (int h = 0; h < 60 && !in_bounds(trial); ++h) {
            t *= 0.5;
            trial = {p.el + t * step(0), p.ej + t * step(1), p.delta + t * step(2)};
        }
        const Eigen::Vector3d taken = t * step;

        const double trial_cost = in_bounds(trial) ? prob.cost(trial) : std::numeric_limits<double>::infinity();
        if (trial_cost <= cost) {
            const double drop = cost - trial_cost;
            p = trial;
            const double before = cost;
            cost = trial_cost;
            result.cost_history.push_back(cost);
            relinearize = true;
            lambda = std::max(lambda / 10.0, 1e-15);
            if (step_small(taken, p) || drop <= options.cost_tolerance * before) {
                result.converged = true;
            }
        } else {
            const Eigen::Vector3d newton = A.ldlt().solve(-b);
            if (newton.allFinite() && step_small(newton, p)) {
                // No representable improvement left.
                result.converged = true;
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e30) {
                break;
            }
        }
    }

    result.iterations = it;
    result.params = from_scaled(p);

    double sum_sq = 0.0;
    for (std::size_t i = 0; i < prob.mu.size(); ++i) {
        const double r = model(p, prob.mu[i]) - prob.f[i];
        sum_sq += r * r;
    }
    result.residual_rms = phys::gigahertz(std::sqrt(sum_sq / static_cast<double>(prob.mu.size())));

    prob.linearize(p, A, b);
    Eigen::Matrix3d cov = pseudo_inverse(A);
    if (!prob.has_sigma && prob.mu.size() > 3) {
        cov *= cost / static_cast<double>(prob.mu.size() - 3);
    }
    const Eigen::Vector3d unit(kHzPerUnit, kHzPerUnit, 1.0);
    result.covariance = unit.asDiagonal() * cov * unit.asDiagonal();
    result.covariance = 0.5 * (result.covariance + result.covariance.transpose()).eval();
    return result;
}

std::vector<Frequency> residuals(std::span<const ResonancePoint> data, const QubitParams& params) {
    std::vector<Frequency> out;
    out.reserve(data.size());
    for (const auto& pt : data) {
        out.push_back(pt.f - qubit::qubit_frequency(params, qubit::FluxBias{pt.mu_ext}));
    }
    return out;
}

std::vector<ResonancePoint> synthesize_data(const QubitParams& params, double mu_min, double mu_max,
                                            std::size_t n_points, Frequency noise_sigma,
                                            std::uint64_t seed) {
    params.validate();
    if (n_points < 2) {
        throw DomainError("synthetic data needs at least 2 points");
    }
    if (!(mu_min < mu_max) || !std::isfinite(mu_min) || !std::isfinite(mu_max)) {
        throw DomainError("synthetic data range is empty or inverted");
    }
    if (!(noise_sigma.value >= 0.0) || !std::isfinite(noise_sigma.value)) {
        throw DomainError("noise sigma must be non-negative");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<ResonancePoint> out;
    out.reserve(n_points);
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double frac = static_cast<double>(i) / last;
        const double mu = i + 1 == n_points ? mu_max : mu_min + (mu_max - mu_min) * frac;
        Frequency f = qubit::qubit_frequency(params, qubit::FluxBias{mu});
        if (noise_sigma.value > 0.0) {
            f = Frequency{std::abs(f.value + noise_sigma.value * noise(rng))};
        }
        out.push_back({mu, f, std::nullopt});
    }
    return out;
}

}  // namespace fluxbcs::fit
