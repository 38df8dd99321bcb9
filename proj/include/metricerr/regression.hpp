#pragma once

#include <optional>

#include "metricerr/dataset.hpp"

namespace metricerr {

enum class RegressionMode { kConstantSigma, kHeteroscedastic };

// Corrected regression metric bundled with the classical baseline.
// correction == corrected.expected - classical; it is the mean of sigma_i^2
// for the MSE and the (nonnegative) Jensen gap for the MAE.
struct RegressionMetricReport {
    double classical = 0.0;
    MetricEstimate corrected;
    double correction = 0.0;
    RegressionMode mode = RegressionMode::kHeteroscedastic;
    // Var(MAE) exactly as printed in the source formulas, for side-by-side
    // reporting only. Never substitutes for corrected.variance.
    std::optional<double> paper_compat_variance;
};

// E(MSE) = (1/M) sum (residual_mean_i^2 + sigma_i^2).
// Var(MSE) = (2/M^2) sum sigma_i^4 + (4/M^2) sum residual_mean_i^2 sigma_i^2,
// evaluated through the constant-sigma arrangement 2 sigma^4 / M + ... when
// the dataset is homoscedastic.
MetricEstimate expected_mse(const RegressionDataset& ds);

// E(MAE) = (1/M) sum E|delta_i| with E|delta_i| the folded-normal mean at
// (residual_mean_i, sigma_i); sigma_i = 0 contributes |residual_mean_i| with
// zero variance (the analytic limit).
// Var(MAE) = (1/M^2) sum Var|delta_i| via the folded-normal identity.
MetricEstimate expected_mae(const RegressionDataset& ds);

// Var(MAE) with the per-observation expansion exactly as printed (the mean
// term enters unsquared). Kept for documenting the discrepancy against the
// Monte Carlo oracle; requires every sigma_i > 0.
double paper_compat_variance_mae(const RegressionDataset& ds);

RegressionMetricReport mse_report(const RegressionDataset& ds);
RegressionMetricReport mae_report(const RegressionDataset& ds, bool include_paper_compat = false);

namespace detail {

// Both variance arrangements, exposed so the consistency of the constant-sigma
// and general paths can be checked on homoscedastic data.
MetricEstimate expected_mse_general(const RegressionDataset& ds);
MetricEstimate expected_mse_constant_sigma(const RegressionDataset& ds);

}  // namespace detail

}  // namespace metricerr
