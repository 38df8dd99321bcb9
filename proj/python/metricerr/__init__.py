"""Expected value and variance of MSE, MAE and accuracy under measurement
errors on the target labels, with Monte Carlo and quadrature oracles."""

from metricerr._core import (
    ClassificationDataset,
    ClassificationMetricReport,
    ConfusionCounts,
    ExactFlipMoments,
    MetricEstimate,
    OracleConfig,
    OracleReport,
    RegressionDataset,
    RegressionMetric,
    RegressionMetricReport,
    RegressionMode,
    VarianceConvention,
    accuracy_decomposition,
    accuracy_with_flipped_labels,
    classical_accuracy,
    classical_mae,
    classical_mse,
    confusion_counts,
    enumerate_flip_accuracy,
    erf,
    erfc,
    expected_accuracy,
    expected_mae,
    expected_mse,
    folded_normal_mean,
    folded_normal_variance,
    mae_report,
    mc_accuracy,
    mc_regression_metric,
    mse_report,
    noncentral_chisq_mean,
    noncentral_chisq_variance,
    normal_cdf,
    paper_compat_variance_mae,
    quad_expected_abs_residual,
    quad_expected_sq_residual,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationDataset",
    "ClassificationMetricReport",
    "ConfusionCounts",
    "ExactFlipMoments",
    "MetricEstimate",
    "OracleConfig",
    "OracleReport",
    "RegressionDataset",
    "RegressionMetric",
    "RegressionMetricReport",
    "RegressionMode",
    "VarianceConvention",
    "accuracy_decomposition",
    "accuracy_with_flipped_labels",
    "classical_accuracy",
    "classical_mae",
    "classical_mse",
    "confusion_counts",
    "enumerate_flip_accuracy",
    "erf",
    "erfc",
    "expected_accuracy",
    "expected_mae",
    "expected_mse",
    "folded_normal_mean",
    "folded_normal_variance",
    "mae_report",
    "mc_accuracy",
    "mc_regression_metric",
    "mse_report",
    "noncentral_chisq_mean",
    "noncentral_chisq_variance",
    "normal_cdf",
    "paper_compat_variance_mae",
    "quad_expected_abs_residual",
    "quad_expected_sq_residual",
]
