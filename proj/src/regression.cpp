#include "metricerr/regression.hpp"

#include <cmath>
#include <stdexcept>

#include "metricerr/classical.hpp"
#include "metricerr/special_functions.hpp"
#include "metricerr/summation.hpp"

namespace metricerr {

namespace {

// Shared expected value: mean residual_mean^2 plus mean sigma^2, accumulated
// identically in both variance paths so dispatch never moves the expectation.
double mse_expected_value(const RegressionDataset& ds) {
    CompensatedSum sq_residuals;
    CompensatedSum sq_sigmas;
    for (const auto& obs : ds.observations()) {
        const double d = obs.residual_mean();
        sq_residuals.add(d * d);
        sq_sigmas.add(obs.sigma * obs.sigma);
    }
    const double m = static_cast<double>(ds.size());
    return sq_residuals.value() / m + sq_sigmas.value() / m;
}

}  // namespace

namespace detail {

MetricEstimate expected_mse_general(const RegressionDataset& ds) {
    const double m = static_cast<double>(ds.size());
    CompensatedSum quartic;
    CompensatedSum cross;
    for (const auto& obs : ds.observations()) {
        const double d = obs.residual_mean();
        const double s2 = obs.sigma * obs.sigma;
        quartic.add(s2 * s2);
        cross.add(d * d * s2);
    }
    const double variance = 2.0 / (m * m) * quartic.value() + 4.0 / (m * m) * cross.value();
    return {mse_expected_value(ds), variance};
}

MetricEstimate expected_mse_constant_sigma(const RegressionDataset& ds) {
    const double m = static_cast<double>(ds.size());
    const double sigma = ds.common_sigma();
    const double s2 = sigma * sigma;
    CompensatedSum sq_residuals;
    for (const auto& obs : ds.observations()) {
        const double d = obs.residual_mean();
        sq_residuals.add(d * d);
    }
    const double variance = 2.0 * s2 * s2 / m + 4.0 * s2 / (m * m) * sq_residuals.value();
    return {mse_expected_value(ds), variance};
}

}  // namespace detail

MetricEstimate expected_mse(const RegressionDataset& ds) {
    return ds.is_homoscedastic() ? detail::expected_mse_constant_sigma(ds)
                                 : detail::expected_mse_general(ds);
}

MetricEstimate expected_mae(const RegressionDataset& ds) {
    const double m = static_cast<double>(ds.size());
    CompensatedSum means;
    CompensatedSum variances;
    for (const auto& obs : ds.observations()) {
        const double d = obs.residual_mean();
        if (obs.sigma == 0.0) {
            // sigma -> 0 limit: |delta_i| is deterministic.
            means.add(std::abs(d));
        } else {
            const FoldedNormalParams p{d, obs.sigma};
            means.add(folded_normal_mean(p));
            variances.add(folded_normal_variance(p));
        }
    }
    return {means.value() / m, variances.value() / (m * m)};
}

double paper_compat_variance_mae(const RegressionDataset& ds) {
    const double m = static_cast<double>(ds.size());
    constexpr double kSqrt2OverPi = 0.7978845608028653558798921198687637;
    CompensatedSum acc;
    for (const auto& obs : ds.observations()) {
        if (obs.sigma <= 0.0) {
            throw std::invalid_argument(
                "paper_compat_variance_mae: printed formula requires sigma > 0 "
                "for every observation");
        }
        const double d = obs.residual_mean();
        const double t = d / (std::sqrt(2.0) * obs.sigma);
        acc.add(d * d + obs.sigma * obs.sigma - d * kSqrt2OverPi * std::exp(-t * t) -
                d * erf(t));
    }
    return acc.value() / (m * m);
}

namespace {

RegressionMode mode_of(const RegressionDataset& ds) {
    return ds.is_homoscedastic() ? RegressionMode::kConstantSigma
                                 : RegressionMode::kHeteroscedastic;
}

}  // namespace

RegressionMetricReport mse_report(const RegressionDataset& ds) {
    RegressionMetricReport report;
    report.classical = classical_mse(ds);
    report.corrected = expected_mse(ds);
    report.correction = report.corrected.expected - report.classical;
    report.mode = mode_of(ds);
    return report;
}

RegressionMetricReport mae_report(const RegressionDataset& ds, bool include_paper_compat) {
    RegressionMetricReport report;
    report.classical = classical_mae(ds);
    report.corrected = expected_mae(ds);
    report.correction = report.corrected.expected - report.classical;
    report.mode = mode_of(ds);
    if (include_paper_compat) {
        report.paper_compat_variance = paper_compat_variance_mae(ds);
    }
    return report;
}

}  // namespace metricerr
