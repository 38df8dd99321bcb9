#pragma once

#include <cstdint>
#include <vector>

#include "metricerr/classical.hpp"
#include "metricerr/dataset.hpp"

namespace metricerr {

// Bernoulli label-flip model: each label is independently kept with
// probability p = 1 - q and replaced by its complement with probability q.
struct FlipModel {
    double q = 0.0;
    double p() const noexcept { return 1.0 - q; }
};

enum class VarianceConvention {
    kOracleConsistent,  // q(1-q)/M: the accuracy averages M independent flips
    kPaperPrinted       // q(1-q): the per-label variance, as printed
};

struct ClassificationMetricReport {
    double classical_accuracy = 0.0;
    MetricEstimate corrected;
    ConfusionCounts confusion;
    VarianceConvention variance_convention = VarianceConvention::kOracleConsistent;
};

// E(ra) = a + q(1 - 2a) with a the classical accuracy.
// Var(ra) = q(1-q)/M by default; the printed q(1-q) via the convention flag.
MetricEstimate expected_accuracy(const ClassificationDataset& ds,
                                 VarianceConvention convention =
                                     VarianceConvention::kOracleConsistent);

// Computes E(ra) through the confusion-matrix route
// (1-q)(TP+TN)/M + q(FP+FN)/M and checks it against expected_accuracy to
// 1e-14 before returning the bundled report.
ClassificationMetricReport accuracy_decomposition(
    const ClassificationDataset& ds,
    VarianceConvention convention = VarianceConvention::kOracleConsistent);

// Realized accuracy for one concrete flip outcome. keep_bits[i] encodes the
// Bernoulli draw b_i: 1 keeps label i, 0 replaces it with its complement.
// This is the deterministic kernel the Monte Carlo oracle samples.
double accuracy_with_flipped_labels(const ClassificationDataset& ds,
                                    const std::vector<std::uint8_t>& keep_bits);

}  // namespace metricerr
