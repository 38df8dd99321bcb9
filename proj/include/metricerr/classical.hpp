#pragma once

#include <cstddef>

#include "metricerr/dataset.hpp"

namespace metricerr {

// Confusion-matrix cells. TP + TN + FP + FN always equals the dataset size.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + tn + fp + fn; }
};

// Decision rule shared by every classification routine: class 1 iff
// p_hat >= alpha (the Heaviside step with H(0) = 1).
inline bool predicts_positive(double p_hat, double alpha) noexcept {
    return p_hat >= alpha;
}

// MSE evaluated at the label means: (1/M) sum (y_bar_i - y_hat_i)^2.
double classical_mse(const RegressionDataset& ds);

// MAE evaluated at the label means: (1/M) sum |y_bar_i - y_hat_i|.
double classical_mae(const RegressionDataset& ds);

// Fraction of observations whose thresholded prediction matches the label.
double classical_accuracy(const ClassificationDataset& ds);

ConfusionCounts confusion_counts(const ClassificationDataset& ds);

}  // namespace metricerr
