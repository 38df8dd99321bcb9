#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metricerr/dataset.hpp"

namespace metricerr {

// Raw repeated measurements, grouped by observation id in first-appearance
// order. Reduced to per-observation (mean, sample std) before any metric.
struct ReplicateTable {
    struct Group {
        std::string id;
        std::vector<double> values;
    };
    std::vector<Group> groups;
};

struct ReducedObservation {
    std::string id;
    double y_bar = 0.0;
    double sigma = 0.0;
};

enum class RegressionSchema { kSummary, kReplicates };

// Mean and Bessel-corrected (n-1) sample standard deviation per group.
// A single-replicate group takes fallback_sigma; without one it is an error
// naming the observation id.
std::vector<ReducedObservation> reduce_replicates(const ReplicateTable& table,
                                                  std::optional<double> fallback_sigma = {});

// Strict CSV: header required, comma separators, '.' decimal, no quoting, no
// missing fields. Summary schema columns: id, y_hat, y_bar, sigma.
// Replicates schema columns: id, replicate, with predictions (id, y_hat) in a
// second file. Every malformed row is rejected with its row number.
RegressionDataset load_regression_csv(const std::string& path, RegressionSchema schema,
                                      const std::optional<std::string>& predictions_path = {},
                                      std::optional<double> fallback_sigma = {});

// Columns: id, y (0/1), p_hat in [0, 1]. alpha and q come from the caller.
ClassificationDataset load_classification_csv(const std::string& path, double alpha,
                                              double flip_probability);

}  // namespace metricerr
