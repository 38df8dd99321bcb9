#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "metricerr/oracle.hpp"

namespace metricerr {

// Quadrature verification summary: worst deviation of the per-observation
// integral from its closed form.
struct QuadCheckSection {
    double max_abs_deviation = 0.0;
    std::int64_t n_observations = 0;

    bool operator==(const QuadCheckSection&) const = default;
};

struct OracleSection {
    std::optional<OracleReport> mc;
    std::optional<QuadCheckSection> quad;

    bool operator==(const OracleSection&) const = default;
};

struct ModeFlags {
    std::optional<bool> homoscedastic;                  // regression metrics
    bool paper_compat = false;
    std::optional<std::string> variance_convention;     // accuracy reports

    bool operator==(const ModeFlags&) const = default;
};

struct InputDigest {
    std::int64_t m = 0;
    std::optional<double> sigma_min;
    std::optional<double> sigma_max;
    std::optional<double> sigma_mean;
    std::optional<double> q;
    std::optional<double> alpha;

    bool operator==(const InputDigest&) const = default;
};

// The full serializable result of one CLI run. Round-trips losslessly
// through JSON.
struct ReportDocument {
    std::string metric;  // "mse" | "mae" | "accuracy"
    double classical = 0.0;
    double expected = 0.0;
    double variance = 0.0;
    double std_dev = 0.0;
    double correction = 0.0;
    ModeFlags mode;
    std::optional<double> paper_compat_variance;
    std::optional<OracleSection> oracle;
    InputDigest input_digest;

    bool operator==(const ReportDocument&) const = default;
};

std::string to_json(const ReportDocument& report);
ReportDocument report_from_json(const std::string& json_text);

std::string to_text(const ReportDocument& report);

}  // namespace metricerr
