#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metricerr/classical.hpp"
#include "metricerr/classification.hpp"
#include "metricerr/csv.hpp"
#include "metricerr/dataset.hpp"
#include "metricerr/oracle.hpp"
#include "metricerr/regression.hpp"
#include "metricerr/special_functions.hpp"

namespace py = pybind11;
using namespace metricerr;

namespace {

RegressionDataset make_regression_dataset(const std::vector<double>& y_hat,
                                          const std::vector<double>& y_bar,
                                          const std::vector<double>& sigma) {
    if (y_hat.size() != y_bar.size() || y_hat.size() != sigma.size()) {
        throw std::invalid_argument("y_hat, y_bar and sigma must have equal length");
    }
    std::vector<RegressionObservation> observations(y_hat.size());
    for (std::size_t i = 0; i < y_hat.size(); ++i) {
        observations[i] = {y_hat[i], y_bar[i], sigma[i]};
    }
    return RegressionDataset(std::move(observations));
}

ClassificationDataset make_classification_dataset(const std::vector<int>& y,
                                                  const std::vector<double>& p_hat,
                                                  double alpha, double q) {
    if (y.size() != p_hat.size()) {
        throw std::invalid_argument("y and p_hat must have equal length");
    }
    std::vector<ClassificationObservation> observations(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        observations[i] = {y[i], p_hat[i]};
    }
    return ClassificationDataset(std::move(observations), alpha, q);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Expected value and variance of MSE, MAE and accuracy under "
              "measurement errors on the target labels";

    py::class_<MetricEstimate>(m, "MetricEstimate")
        .def_readonly("expected", &MetricEstimate::expected)
        .def_readonly("variance", &MetricEstimate::variance)
        .def_property_readonly("std", &MetricEstimate::std_dev)
        .def("__repr__", [](const MetricEstimate& e) {
            return "MetricEstimate(expected=" + std::to_string(e.expected) +
                   ", variance=" + std::to_string(e.variance) + ")";
        });

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def_readonly("tp", &ConfusionCounts::tp)
        .def_readonly("tn", &ConfusionCounts::tn)
        .def_readonly("fp", &ConfusionCounts::fp)
        .def_readonly("fn", &ConfusionCounts::fn);

    py::class_<RegressionDataset>(m, "RegressionDataset")
        .def(py::init(&make_regression_dataset), py::arg("y_hat"), py::arg("y_bar"),
             py::arg("sigma"))
        .def_property_readonly("m", &RegressionDataset::size)
        .def_property_readonly("is_homoscedastic", &RegressionDataset::is_homoscedastic);

    py::class_<ClassificationDataset>(m, "ClassificationDataset")
        .def(py::init(&make_classification_dataset), py::arg("y"), py::arg("p_hat"),
             py::arg("alpha") = 0.5, py::arg("q") = 0.0)
        .def_property_readonly("m", &ClassificationDataset::size)
        .def_property_readonly("alpha", &ClassificationDataset::alpha)
        .def_property_readonly("q", &ClassificationDataset::flip_probability);

    py::enum_<RegressionMode>(m, "RegressionMode")
        .value("constant_sigma", RegressionMode::kConstantSigma)
        .value("heteroscedastic", RegressionMode::kHeteroscedastic);

    py::enum_<VarianceConvention>(m, "VarianceConvention")
        .value("oracle_consistent", VarianceConvention::kOracleConsistent)
        .value("paper_printed", VarianceConvention::kPaperPrinted);

    py::class_<RegressionMetricReport>(m, "RegressionMetricReport")
        .def_readonly("classical", &RegressionMetricReport::classical)
        .def_readonly("corrected", &RegressionMetricReport::corrected)
        .def_readonly("correction", &RegressionMetricReport::correction)
        .def_readonly("mode", &RegressionMetricReport::mode)
        .def_readonly("paper_compat_variance", &RegressionMetricReport::paper_compat_variance);

    py::class_<ClassificationMetricReport>(m, "ClassificationMetricReport")
        .def_readonly("classical_accuracy", &ClassificationMetricReport::classical_accuracy)
        .def_readonly("corrected", &ClassificationMetricReport::corrected)
        .def_readonly("confusion", &ClassificationMetricReport::confusion)
        .def_readonly("variance_convention", &ClassificationMetricReport::variance_convention);

    m.def("classical_mse", &classical_mse, py::arg("dataset"));
    m.def("classical_mae", &classical_mae, py::arg("dataset"));
    m.def("classical_accuracy", &classical_accuracy, py::arg("dataset"));
    m.def("confusion_counts", &confusion_counts, py::arg("dataset"));

    m.def("expected_mse", &expected_mse, py::arg("dataset"));
    m.def("expected_mae", &expected_mae, py::arg("dataset"));
    m.def("mse_report", &mse_report, py::arg("dataset"));
    m.def("mae_report", &mae_report, py::arg("dataset"), py::arg("include_paper_compat") = false);
    m.def("paper_compat_variance_mae", &paper_compat_variance_mae, py::arg("dataset"));

    m.def("expected_accuracy", &expected_accuracy, py::arg("dataset"),
          py::arg("convention") = VarianceConvention::kOracleConsistent);
    m.def("accuracy_decomposition", &accuracy_decomposition, py::arg("dataset"),
          py::arg("convention") = VarianceConvention::kOracleConsistent);
    m.def("accuracy_with_flipped_labels", &accuracy_with_flipped_labels, py::arg("dataset"),
          py::arg("keep_bits"));

    m.def("erf", [](double x) { return metricerr::erf(x); }, py::arg("x"));
    m.def("erfc", [](double x) { return metricerr::erfc(x); }, py::arg("x"));
    m.def("normal_cdf", &normal_cdf, py::arg("x"));
    m.def("folded_normal_mean",
          [](double mu, double sigma) { return folded_normal_mean({mu, sigma}); },
          py::arg("mu"), py::arg("sigma"));
    m.def("folded_normal_variance",
          [](double mu, double sigma) { return folded_normal_variance({mu, sigma}); },
          py::arg("mu"), py::arg("sigma"));
    m.def("noncentral_chisq_mean",
          [](std::int64_t dof, double lam) { return noncentral_chisq_mean({dof, lam}); },
          py::arg("dof"), py::arg("lambda_"));
    m.def("noncentral_chisq_variance",
          [](std::int64_t dof, double lam) { return noncentral_chisq_variance({dof, lam}); },
          py::arg("dof"), py::arg("lambda_"));

    py::class_<OracleConfig>(m, "OracleConfig")
        .def(py::init([](std::int64_t n_samples, std::uint64_t seed, double quad_tolerance,
                         int max_quad_depth) {
                 return OracleConfig{n_samples, seed, quad_tolerance, max_quad_depth};
             }),
             py::arg("n_samples") = 1'000'000, py::arg("seed") = 0,
             py::arg("quad_tolerance") = 1e-12, py::arg("max_quad_depth") = 60)
        .def_readwrite("n_samples", &OracleConfig::n_samples)
        .def_readwrite("seed", &OracleConfig::seed)
        .def_readwrite("quad_tolerance", &OracleConfig::quad_tolerance)
        .def_readwrite("max_quad_depth", &OracleConfig::max_quad_depth);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("estimate", &OracleReport::estimate)
        .def_readonly("standard_error", &OracleReport::standard_error)
        .def_readonly("n_effective", &OracleReport::n_effective)
        .def_readonly("closed_form", &OracleReport::closed_form)
        .def_readonly("z_score", &OracleReport::z_score)
        .def_readonly("var_estimate", &OracleReport::var_estimate)
        .def_readonly("var_standard_error", &OracleReport::var_standard_error)
        .def_readonly("var_closed_form", &OracleReport::var_closed_form)
        .def_readonly("var_z_score", &OracleReport::var_z_score);

    py::enum_<RegressionMetric>(m, "RegressionMetric")
        .value("mse", RegressionMetric::kMse)
        .value("mae", RegressionMetric::kMae);

    m.def("mc_regression_metric", &mc_regression_metric, py::arg("dataset"), py::arg("metric"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("mc_accuracy", &mc_accuracy, py::arg("dataset"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("quad_expected_sq_residual",
          [](double y_hat, double y_bar, double sigma, const OracleConfig& cfg) {
              return quad_expected_sq_residual({y_hat, y_bar, sigma}, cfg);
          },
          py::arg("y_hat"), py::arg("y_bar"), py::arg("sigma"), py::arg("config"));
    m.def("quad_expected_abs_residual",
          [](double y_hat, double y_bar, double sigma, const OracleConfig& cfg) {
              return quad_expected_abs_residual({y_hat, y_bar, sigma}, cfg);
          },
          py::arg("y_hat"), py::arg("y_bar"), py::arg("sigma"), py::arg("config"));

    py::class_<ExactFlipMoments>(m, "ExactFlipMoments")
        .def_readonly("mean", &ExactFlipMoments::mean)
        .def_readonly("variance", &ExactFlipMoments::variance);
    m.def("enumerate_flip_accuracy", &enumerate_flip_accuracy, py::arg("dataset"));
}
