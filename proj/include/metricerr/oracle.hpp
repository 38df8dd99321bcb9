#pragma once

#include <cstdint>

#include "metricerr/dataset.hpp"
#include "metricerr/quadrature.hpp"

namespace metricerr {

enum class RegressionMetric { kMse, kMae };

struct OracleConfig {
    std::int64_t n_samples = 1'000'000;
    std::uint64_t seed = 0;
    double quad_tolerance = 1e-12;
    int max_quad_depth = 60;
};

// One Monte Carlo verdict: sample mean and sample variance of the simulated
// metric, their standard errors, and z-scores against the closed forms.
// standard_error == 0 marks a degenerate (deterministic) sampler.
struct OracleReport {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::int64_t n_effective = 0;
    double closed_form = 0.0;
    double z_score = 0.0;

    double var_estimate = 0.0;
    double var_standard_error = 0.0;
    double var_closed_form = 0.0;
    double var_z_score = 0.0;

    bool operator==(const OracleReport&) const = default;
};

// Simulates the Gaussian label-noise model: n_samples realizations of
// y_i = y_bar_i + sigma_i * z, metric evaluated on each. Bit-reproducible
// for a given (seed, n_samples, dataset) regardless of thread count.
OracleReport mc_regression_metric(const RegressionDataset& ds, RegressionMetric metric,
                                  const OracleConfig& cfg);

// Simulates the Bernoulli flip model via accuracy_with_flipped_labels.
OracleReport mc_accuracy(const ClassificationDataset& ds, const OracleConfig& cfg);

// Adaptive quadrature of (y - y_hat)^2 N(y; y_bar, sigma^2) over
// y_bar +/- 12 sigma. Equals residual_mean^2 + sigma^2 analytically.
double quad_expected_sq_residual(const RegressionObservation& obs, const OracleConfig& cfg);

// Adaptive quadrature of |y - y_hat| N(y; y_bar, sigma^2), domain split at
// the kink y = y_hat. Equals the folded-normal mean analytically.
double quad_expected_abs_residual(const RegressionObservation& obs, const OracleConfig& cfg);

// Exact mean and variance of the flipped-label accuracy, by enumerating all
// 2^M flip vectors with their Bernoulli weights. Exponential in M; rejected
// above M = 24.
struct ExactFlipMoments {
    double mean = 0.0;
    double variance = 0.0;
};
ExactFlipMoments enumerate_flip_accuracy(const ClassificationDataset& ds);

namespace detail {

// Quadrature with and without the kink split, exposing convergence effort.
QuadratureResult abs_residual_quadrature(const RegressionObservation& obs,
                                         const OracleConfig& cfg, bool split_at_kink);

}  // namespace detail

}  // namespace metricerr
