#include "metricerr/classical.hpp"

#include <stdexcept>

#include "metricerr/summation.hpp"

namespace metricerr {

namespace {

void require_nonempty(std::size_t m) {
    if (m == 0) throw std::invalid_argument("empty dataset");
}

}  // namespace

double classical_mse(const RegressionDataset& ds) {
    require_nonempty(ds.size());
    CompensatedSum acc;
    for (const auto& obs : ds.observations()) {
        const double d = obs.residual_mean();
        acc.add(d * d);
    }
    return acc.value() / static_cast<double>(ds.size());
}

double classical_mae(const RegressionDataset& ds) {
    require_nonempty(ds.size());
    CompensatedSum acc;
    for (const auto& obs : ds.observations()) {
        acc.add(std::abs(obs.residual_mean()));
    }
    return acc.value() / static_cast<double>(ds.size());
}

double classical_accuracy(const ClassificationDataset& ds) {
    require_nonempty(ds.size());
    std::size_t correct = 0;
    for (const auto& obs : ds.observations()) {
        const bool positive = predicts_positive(obs.p_hat, ds.alpha());
        if ((obs.y == 1) == positive) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(ds.size());
}

ConfusionCounts confusion_counts(const ClassificationDataset& ds) {
    require_nonempty(ds.size());
    ConfusionCounts counts;
    for (const auto& obs : ds.observations()) {
        const bool positive = predicts_positive(obs.p_hat, ds.alpha());
        if (obs.y == 1) {
            positive ? ++counts.tp : ++counts.fn;
        } else {
            positive ? ++counts.fp : ++counts.tn;
        }
    }
    return counts;
}

}  // namespace metricerr
