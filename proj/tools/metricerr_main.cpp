#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "metricerr/classical.hpp"
#include "metricerr/classification.hpp"
#include "metricerr/csv.hpp"
#include "metricerr/oracle.hpp"
#include "metricerr/regression.hpp"
#include "metricerr/report.hpp"
#include "metricerr/special_functions.hpp"
#include "metricerr/summation.hpp"

namespace {

using namespace metricerr;

struct CliOptions {
    std::string metric;
    std::string input;
    std::string schema = "summary";
    std::optional<std::string> predictions;
    double flip_prob = 0.0;
    double threshold = 0.5;
    std::optional<double> fallback_sigma;
    std::optional<std::int64_t> mc_check;
    std::uint64_t seed = 0;
    bool quad_check = false;
    bool paper_compat = false;
    std::string format = "text";
};

InputDigest regression_digest(const RegressionDataset& ds) {
    InputDigest digest;
    digest.m = static_cast<std::int64_t>(ds.size());
    double lo = ds.observations().front().sigma;
    double hi = lo;
    CompensatedSum total;
    for (const auto& obs : ds.observations()) {
        lo = std::min(lo, obs.sigma);
        hi = std::max(hi, obs.sigma);
        total.add(obs.sigma);
    }
    digest.sigma_min = lo;
    digest.sigma_max = hi;
    digest.sigma_mean = total.value() / static_cast<double>(ds.size());
    return digest;
}

QuadCheckSection run_quad_check(const RegressionDataset& ds, bool mse, const OracleConfig& cfg) {
    QuadCheckSection section;
    for (const auto& obs : ds.observations()) {
        if (obs.sigma == 0.0) continue;  // degenerate density, closed form is exact
        const double d = obs.residual_mean();
        double integral = 0.0;
        double closed = 0.0;
        if (mse) {
            integral = quad_expected_sq_residual(obs, cfg);
            closed = d * d + obs.sigma * obs.sigma;
        } else {
            integral = quad_expected_abs_residual(obs, cfg);
            closed = folded_normal_mean({d, obs.sigma});
        }
        section.max_abs_deviation =
            std::max(section.max_abs_deviation, std::abs(integral - closed));
        ++section.n_observations;
    }
    return section;
}

ReportDocument build_regression_report(const CliOptions& opt) {
    const auto schema =
        opt.schema == "summary" ? RegressionSchema::kSummary : RegressionSchema::kReplicates;
    const auto ds = load_regression_csv(opt.input, schema, opt.predictions, opt.fallback_sigma);

    const bool mse = opt.metric == "mse";
    if (mse && opt.paper_compat) {
        throw std::invalid_argument("--paper-compat applies to mae and accuracy only");
    }
    const auto base = mse ? mse_report(ds) : mae_report(ds, opt.paper_compat);

    ReportDocument doc;
    doc.metric = opt.metric;
    doc.classical = base.classical;
    doc.expected = base.corrected.expected;
    doc.variance = base.corrected.variance;
    doc.std_dev = base.corrected.std_dev();
    doc.correction = base.correction;
    doc.mode.homoscedastic = ds.is_homoscedastic();
    doc.mode.paper_compat = opt.paper_compat;
    doc.paper_compat_variance = base.paper_compat_variance;
    doc.input_digest = regression_digest(ds);

    OracleSection oracle;
    OracleConfig cfg;
    cfg.seed = opt.seed;
    if (opt.mc_check) {
        cfg.n_samples = *opt.mc_check;
        oracle.mc = mc_regression_metric(ds, mse ? RegressionMetric::kMse : RegressionMetric::kMae,
                                         cfg);
    }
    if (opt.quad_check) {
        oracle.quad = run_quad_check(ds, mse, cfg);
    }
    if (oracle.mc || oracle.quad) doc.oracle = oracle;
    return doc;
}

ReportDocument build_accuracy_report(const CliOptions& opt) {
    const auto ds = load_classification_csv(opt.input, opt.threshold, opt.flip_prob);
    const auto report = accuracy_decomposition(ds);

    ReportDocument doc;
    doc.metric = "accuracy";
    doc.classical = report.classical_accuracy;
    doc.expected = report.corrected.expected;
    doc.variance = report.corrected.variance;
    doc.std_dev = report.corrected.std_dev();
    doc.correction = doc.expected - doc.classical;
    doc.mode.paper_compat = opt.paper_compat;
    doc.mode.variance_convention = "oracle-consistent";
    if (opt.paper_compat) {
        doc.paper_compat_variance =
            expected_accuracy(ds, VarianceConvention::kPaperPrinted).variance;
    }
    doc.input_digest.m = static_cast<std::int64_t>(ds.size());
    doc.input_digest.q = ds.flip_probability();
    doc.input_digest.alpha = ds.alpha();

    if (opt.mc_check) {
        OracleConfig cfg;
        cfg.seed = opt.seed;
        cfg.n_samples = *opt.mc_check;
        OracleSection oracle;
        oracle.mc = mc_accuracy(ds, cfg);
        doc.oracle = oracle;
    }
    return doc;
}

int run(const CliOptions& opt) {
    if (opt.metric == "accuracy") {
        if (opt.schema == "replicates") {
            throw std::invalid_argument("--schema replicates applies to regression metrics only");
        }
        if (opt.predictions || opt.fallback_sigma) {
            throw std::invalid_argument(
                "--predictions and --fallback-sigma apply to regression metrics only");
        }
        if (opt.quad_check) {
            throw std::invalid_argument("--quad-check applies to regression metrics only");
        }
    } else {
        if (opt.schema == "summary" && opt.predictions) {
            throw std::invalid_argument("--predictions requires --schema replicates");
        }
        if (opt.schema == "summary" && opt.fallback_sigma) {
            throw std::invalid_argument("--fallback-sigma requires --schema replicates");
        }
    }

    const auto doc = opt.metric == "accuracy" ? build_accuracy_report(opt)
                                              : build_regression_report(opt);
    std::cout << (opt.format == "json" ? to_json(doc) : to_text(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expectation and variance of MSE, MAE and accuracy under "
                 "measurement errors on the target labels"};
    CliOptions opt;

    app.add_option("--metric", opt.metric, "Metric to evaluate")
        ->required()
        ->check(CLI::IsMember({"mse", "mae", "accuracy"}));
    app.add_option("--input", opt.input, "Input CSV file")->required();
    app.add_option("--schema", opt.schema, "Regression input schema")
        ->check(CLI::IsMember({"summary", "replicates"}));
    app.add_option("--predictions", opt.predictions,
                   "Predictions CSV (id, y_hat) for --schema replicates");
    app.add_option("--flip-prob", opt.flip_prob, "Label flip probability q (accuracy)");
    app.add_option("--threshold", opt.threshold, "Decision threshold alpha (accuracy)",
                   true);
    app.add_option("--fallback-sigma", opt.fallback_sigma,
                   "Sigma for single-replicate observations");
    app.add_option("--mc-check", opt.mc_check,
                   "Verify the closed forms with a Monte Carlo run of N samples");
    app.add_option("--seed", opt.seed, "Monte Carlo seed", true);
    app.add_flag("--quad-check", opt.quad_check,
                 "Verify per-observation integrals by adaptive quadrature");
    app.add_flag("--paper-compat", opt.paper_compat,
                 "Also report the variance formulas exactly as printed");
    app.add_option("--format", opt.format, "Output format", true)
        ->check(CLI::IsMember({"json", "text"}));

    bool flip_given = false;
    bool threshold_given = false;
    app.parse_complete_callback([&] {
        flip_given = app.count("--flip-prob") > 0;
        threshold_given = app.count("--threshold") > 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (opt.metric != "accuracy" && (flip_given || threshold_given)) {
            throw std::invalid_argument(
                "--flip-prob and --threshold apply to --metric accuracy only");
        }
        return run(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
