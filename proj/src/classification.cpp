#include "metricerr/classification.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metricerr {

MetricEstimate expected_accuracy(const ClassificationDataset& ds,
                                 VarianceConvention convention) {
    const double a = classical_accuracy(ds);
    const double q = ds.flip_probability();
    const double expected = a + q * (1.0 - 2.0 * a);
    double variance = q * (1.0 - q);
    if (convention == VarianceConvention::kOracleConsistent) {
        variance /= static_cast<double>(ds.size());
    }
    return {expected, variance};
}

ClassificationMetricReport accuracy_decomposition(const ClassificationDataset& ds,
                                                  VarianceConvention convention) {
    ClassificationMetricReport report;
    report.classical_accuracy = classical_accuracy(ds);
    report.confusion = confusion_counts(ds);
    report.variance_convention = convention;

    const double m = static_cast<double>(ds.size());
    const double q = ds.flip_probability();
    const double diagonal = static_cast<double>(report.confusion.tp + report.confusion.tn);
    const double off_diagonal = static_cast<double>(report.confusion.fp + report.confusion.fn);
    const double decomposed = (1.0 - q) * diagonal / m + q * off_diagonal / m;

    report.corrected = expected_accuracy(ds, convention);
    if (std::abs(decomposed - report.corrected.expected) > 1e-14) {
        throw std::logic_error(
            "accuracy_decomposition: confusion-matrix route disagrees with the "
            "direct formula by " +
            std::to_string(decomposed - report.corrected.expected));
    }
    report.corrected.expected = decomposed;
    return report;
}

double accuracy_with_flipped_labels(const ClassificationDataset& ds,
                                    const std::vector<std::uint8_t>& keep_bits) {
    if (keep_bits.size() != ds.size()) {
        throw std::invalid_argument("accuracy_with_flipped_labels: flip vector length " +
                                    std::to_string(keep_bits.size()) +
                                    " does not match dataset size " +
                                    std::to_string(ds.size()));
    }
    std::size_t correct = 0;
    const auto& observations = ds.observations();
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const int label = keep_bits[i] ? observations[i].y : 1 - observations[i].y;
        const bool positive = predicts_positive(observations[i].p_hat, ds.alpha());
        if ((label == 1) == positive) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(ds.size());
}

}  // namespace metricerr
