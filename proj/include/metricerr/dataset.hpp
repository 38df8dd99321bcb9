#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace metricerr {

// One regression observation: model prediction y_hat, label mean y_bar and
// label standard deviation sigma (same units as y). The residual mean is
// defined as residual_mean() = y_hat - y_bar throughout this library; every
// corrected formula depends only on its square or absolute value.
struct RegressionObservation {
    double y_hat = 0.0;
    double y_bar = 0.0;
    double sigma = 0.0;

    double residual_mean() const noexcept { return y_hat - y_bar; }
};

class RegressionDataset {
public:
    explicit RegressionDataset(std::vector<RegressionObservation> observations)
        : observations_(std::move(observations)) {
        validate();
    }

    const std::vector<RegressionObservation>& observations() const noexcept {
        return observations_;
    }
    std::size_t size() const noexcept { return observations_.size(); }

    // True iff all sigmas agree within 1e-12 relative spread.
    bool is_homoscedastic() const noexcept { return homoscedastic_; }

    // Representative sigma for the constant-sigma code path (first observation).
    double common_sigma() const noexcept {
        return observations_.empty() ? 0.0 : observations_.front().sigma;
    }

private:
    void validate() {
        if (observations_.empty()) {
            throw std::invalid_argument("empty dataset");
        }
        double sigma_min = observations_.front().sigma;
        double sigma_max = sigma_min;
        for (const auto& obs : observations_) {
            if (!std::isfinite(obs.y_hat) || !std::isfinite(obs.y_bar)) {
                throw std::invalid_argument("regression observation: y_hat and y_bar must be finite");
            }
            if (!std::isfinite(obs.sigma) || obs.sigma < 0.0) {
                throw std::invalid_argument("regression observation: sigma must be finite and >= 0");
            }
            sigma_min = std::min(sigma_min, obs.sigma);
            sigma_max = std::max(sigma_max, obs.sigma);
        }
        homoscedastic_ = (sigma_max - sigma_min) <= 1e-12 * sigma_max;
    }

    std::vector<RegressionObservation> observations_;
    bool homoscedastic_ = false;
};

// One binary-classification observation: label y in {0,1} and the model's
// predicted probability of class 1.
struct ClassificationObservation {
    int y = 0;
    double p_hat = 0.0;
};

class ClassificationDataset {
public:
    ClassificationDataset(std::vector<ClassificationObservation> observations,
                          double alpha, double flip_probability)
        : observations_(std::move(observations)), alpha_(alpha), q_(flip_probability) {
        validate();
    }

    const std::vector<ClassificationObservation>& observations() const noexcept {
        return observations_;
    }
    std::size_t size() const noexcept { return observations_.size(); }
    double alpha() const noexcept { return alpha_; }
    double flip_probability() const noexcept { return q_; }
    double keep_probability() const noexcept { return 1.0 - q_; }

private:
    void validate() {
        if (observations_.empty()) {
            throw std::invalid_argument("empty dataset");
        }
        if (!(alpha_ > 0.0) || !(alpha_ < 1.0)) {
            throw std::invalid_argument("threshold alpha must lie in (0, 1)");
        }
        // q > 0.5 means the labels are anti-informative; the caller should
        // flip them rather than have us average over a nonsense model.
        if (!(q_ >= 0.0) || !(q_ <= 0.5)) {
            throw std::invalid_argument("flip probability q must lie in [0, 0.5]");
        }
        for (const auto& obs : observations_) {
            if (obs.y != 0 && obs.y != 1) {
                throw std::invalid_argument("classification label y must be 0 or 1");
            }
            if (!std::isfinite(obs.p_hat) || obs.p_hat < 0.0 || obs.p_hat > 1.0) {
                throw std::invalid_argument("predicted probability p_hat must lie in [0, 1]");
            }
        }
    }

    std::vector<ClassificationObservation> observations_;
    double alpha_;
    double q_;
};

// Expected value and variance of a metric under the noise model.
struct MetricEstimate {
    double expected = 0.0;
    double variance = 0.0;

    double std_dev() const noexcept { return std::sqrt(variance); }
};

}  // namespace metricerr
