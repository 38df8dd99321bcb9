#include "metricerr/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "metricerr/classical.hpp"
#include "metricerr/classification.hpp"
#include "metricerr/regression.hpp"
#include "metricerr/rng.hpp"
#include "metricerr/summation.hpp"

namespace metricerr {

namespace {

void validate(const OracleConfig& cfg) {
    if (cfg.n_samples < 1000) {
        throw std::invalid_argument("oracle config: n_samples must be >= 1000");
    }
    if (!(cfg.quad_tolerance > 0.0) || cfg.quad_tolerance > 1e-3) {
        throw std::invalid_argument("oracle config: quad_tolerance must lie in (0, 1e-3]");
    }
    if (cfg.max_quad_depth < 1) {
        throw std::invalid_argument("oracle config: max_quad_depth must be >= 1");
    }
}

// Fills values[k] for k in [0, n) with fill(k), splitting the range over a
// few threads. Every entry is a pure function of its index, so the result is
// identical for any thread count.
template <typename Fill>
void fill_indexed(std::vector<double>& values, const Fill& fill) {
    const std::size_t n = values.size();
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t n_threads = std::max(1u, std::min(hw, 8u));
    if (n_threads == 1 || n < 4096) {
        for (std::size_t k = 0; k < n; ++k) values[k] = fill(k);
        return;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&values, &fill, lo, hi] {
            for (std::size_t k = lo; k < hi; ++k) values[k] = fill(k);
        });
    }
    for (auto& w : workers) w.join();
}

struct SampleMoments {
    double mean = 0.0;
    double se_mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    double se_variance = 0.0;
};

SampleMoments reduce_moments(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    SampleMoments out;
    out.mean = compensated_total(values) / n;

    CompensatedSum m2;
    CompensatedSum m4;
    for (double v : values) {
        const double d = v - out.mean;
        const double d2 = d * d;
        m2.add(d2);
        m4.add(d2 * d2);
    }
    if (values.size() < 2) return out;
    out.variance = m2.value() / (n - 1.0);
    out.se_mean = std::sqrt(out.variance / n);
    // SE of the sample variance from the fourth central moment.
    const double mu4 = m4.value() / n;
    const double s4 = out.variance * out.variance;
    const double inner = mu4 - s4 * (n - 3.0) / (n - 1.0);
    out.se_variance = inner > 0.0 ? std::sqrt(inner / n) : 0.0;
    return out;
}

OracleReport report_from(const SampleMoments& m, std::int64_t n, double closed_mean,
                         double closed_variance) {
    OracleReport report;
    report.estimate = m.mean;
    report.standard_error = m.se_mean;
    report.n_effective = n;
    report.closed_form = closed_mean;
    report.z_score = m.se_mean > 0.0 ? (m.mean - closed_mean) / m.se_mean : 0.0;
    report.var_estimate = m.variance;
    report.var_standard_error = m.se_variance;
    report.var_closed_form = closed_variance;
    report.var_z_score =
        m.se_variance > 0.0 ? (m.variance - closed_variance) / m.se_variance : 0.0;
    return report;
}

}  // namespace

OracleReport mc_regression_metric(const RegressionDataset& ds, RegressionMetric metric,
                                  const OracleConfig& cfg) {
    validate(cfg);
    const auto& observations = ds.observations();
    const double m = static_cast<double>(ds.size());
    const bool square = metric == RegressionMetric::kMse;

    std::vector<double> values(static_cast<std::size_t>(cfg.n_samples));
    fill_indexed(values, [&](std::size_t draw) {
        CompensatedSum acc;
        for (std::size_t i = 0; i < observations.size(); ++i) {
            const auto& obs = observations[i];
            double delta = obs.y_bar - obs.y_hat;
            if (obs.sigma > 0.0) {
                delta += obs.sigma * rng::standard_normal(cfg.seed, i, draw);
            }
            acc.add(square ? delta * delta : std::abs(delta));
        }
        return acc.value() / m;
    });

    const auto closed = square ? expected_mse(ds) : expected_mae(ds);
    return report_from(reduce_moments(values), cfg.n_samples, closed.expected, closed.variance);
}

OracleReport mc_accuracy(const ClassificationDataset& ds, const OracleConfig& cfg) {
    validate(cfg);
    const double p = ds.keep_probability();

    std::vector<double> values(static_cast<std::size_t>(cfg.n_samples));
    fill_indexed(values, [&](std::size_t draw) {
        std::vector<std::uint8_t> keep(ds.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            keep[i] = rng::bernoulli(cfg.seed, i, draw, p) ? 1 : 0;
        }
        return accuracy_with_flipped_labels(ds, keep);
    });

    const auto closed = expected_accuracy(ds);
    return report_from(reduce_moments(values), cfg.n_samples, closed.expected, closed.variance);
}

namespace {

constexpr double kTailWidth = 12.0;  // integration window in units of sigma

void require_positive_sigma(const RegressionObservation& obs, const char* fn) {
    if (!(obs.sigma > 0.0)) {
        throw std::invalid_argument(std::string(fn) + ": sigma must be > 0");
    }
}

double normal_pdf(double y, double mean, double sigma) {
    const double z = (y - mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

double quad_expected_sq_residual(const RegressionObservation& obs, const OracleConfig& cfg) {
    validate(cfg);
    require_positive_sigma(obs, "quad_expected_sq_residual");
    const double lo = obs.y_bar - kTailWidth * obs.sigma;
    const double hi = obs.y_bar + kTailWidth * obs.sigma;
    const auto f = [&](double y) {
        const double d = y - obs.y_hat;
        return d * d * normal_pdf(y, obs.y_bar, obs.sigma);
    };
    return integrate(f, lo, hi, cfg.quad_tolerance, cfg.max_quad_depth).value;
}

namespace detail {

QuadratureResult abs_residual_quadrature(const RegressionObservation& obs,
                                         const OracleConfig& cfg, bool split_at_kink) {
    validate(cfg);
    require_positive_sigma(obs, "quad_expected_abs_residual");
    const double lo = obs.y_bar - kTailWidth * obs.sigma;
    const double hi = obs.y_bar + kTailWidth * obs.sigma;
    const auto f = [&](double y) {
        return std::abs(y - obs.y_hat) * normal_pdf(y, obs.y_bar, obs.sigma);
    };
    if (!split_at_kink) {
        return integrate(f, lo, hi, cfg.quad_tolerance, cfg.max_quad_depth);
    }
    const double kink[1] = {obs.y_hat};
    return integrate_split(f, lo, hi, kink, cfg.quad_tolerance, cfg.max_quad_depth);
}

}  // namespace detail

double quad_expected_abs_residual(const RegressionObservation& obs, const OracleConfig& cfg) {
    return detail::abs_residual_quadrature(obs, cfg, /*split_at_kink=*/true).value;
}

ExactFlipMoments enumerate_flip_accuracy(const ClassificationDataset& ds) {
    const std::size_t m = ds.size();
    if (m > 24) {
        throw std::invalid_argument("enumerate_flip_accuracy: 2^M enumeration rejected for M = " +
                                    std::to_string(m));
    }
    // Bitmask of classically correct observations.
    std::uint32_t correct_mask = 0;
    const auto& observations = ds.observations();
    for (std::size_t i = 0; i < m; ++i) {
        const bool positive = predicts_positive(observations[i].p_hat, ds.alpha());
        if ((observations[i].y == 1) == positive) correct_mask |= (1u << i);
    }

    const double p = ds.keep_probability();
    const double q = ds.flip_probability();
    std::vector<double> p_pow(m + 1, 1.0);
    std::vector<double> q_pow(m + 1, 1.0);
    for (std::size_t k = 1; k <= m; ++k) {
        p_pow[k] = p_pow[k - 1] * p;
        q_pow[k] = q_pow[k - 1] * q;
    }

    CompensatedSum mean_acc;
    CompensatedSum second_acc;
    const std::uint32_t full = m == 32 ? ~0u : ((1u << m) - 1u);
    for (std::uint32_t keep = 0;; ++keep) {
        const int ones = std::popcount(keep);
        const double weight = p_pow[ones] * q_pow[m - static_cast<std::size_t>(ones)];
        // Kept observations contribute their classical correctness; flipped
        // ones contribute its complement.
        const int n_correct = std::popcount(keep & correct_mask) +
                              static_cast<int>(m) - std::popcount(keep | correct_mask);
        const double acc = static_cast<double>(n_correct) / static_cast<double>(m);
        mean_acc.add(weight * acc);
        second_acc.add(weight * acc * acc);
        if (keep == full) break;
    }
    const double mean = mean_acc.value();
    return {mean, second_acc.value() - mean * mean};
}

}  // namespace metricerr
