#include "metricerr/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace metricerr {

namespace {

using nlohmann::json;

json oracle_report_to_json(const OracleReport& r) {
    return json{{"estimate", r.estimate},
                {"standard_error", r.standard_error},
                {"n_effective", r.n_effective},
                {"closed_form", r.closed_form},
                {"z_score", r.z_score},
                {"var_estimate", r.var_estimate},
                {"var_standard_error", r.var_standard_error},
                {"var_closed_form", r.var_closed_form},
                {"var_z_score", r.var_z_score}};
}

OracleReport oracle_report_from_json(const json& j) {
    OracleReport r;
    r.estimate = j.at("estimate").get<double>();
    r.standard_error = j.at("standard_error").get<double>();
    r.n_effective = j.at("n_effective").get<std::int64_t>();
    r.closed_form = j.at("closed_form").get<double>();
    r.z_score = j.at("z_score").get<double>();
    r.var_estimate = j.at("var_estimate").get<double>();
    r.var_standard_error = j.at("var_standard_error").get<double>();
    r.var_closed_form = j.at("var_closed_form").get<double>();
    r.var_z_score = j.at("var_z_score").get<double>();
    return r;
}

// %.17g: enough digits for a lossless double round-trip.
std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

std::string to_json(const ReportDocument& report) {
    json mode;
    if (report.mode.homoscedastic) mode["homoscedastic"] = *report.mode.homoscedastic;
    mode["paper_compat"] = report.mode.paper_compat;
    if (report.mode.variance_convention) {
        mode["variance_convention"] = *report.mode.variance_convention;
    }

    json digest;
    digest["m"] = report.input_digest.m;
    if (report.input_digest.sigma_min) digest["sigma_min"] = *report.input_digest.sigma_min;
    if (report.input_digest.sigma_max) digest["sigma_max"] = *report.input_digest.sigma_max;
    if (report.input_digest.sigma_mean) digest["sigma_mean"] = *report.input_digest.sigma_mean;
    if (report.input_digest.q) digest["q"] = *report.input_digest.q;
    if (report.input_digest.alpha) digest["alpha"] = *report.input_digest.alpha;

    json doc;
    doc["metric"] = report.metric;
    doc["classical"] = report.classical;
    doc["expected"] = report.expected;
    doc["variance"] = report.variance;
    doc["std"] = report.std_dev;
    doc["correction"] = report.correction;
    doc["mode"] = mode;
    if (report.paper_compat_variance) {
        doc["paper_compat_variance"] = *report.paper_compat_variance;
    }
    if (report.oracle) {
        json oracle;
        if (report.oracle->mc) oracle["mc"] = oracle_report_to_json(*report.oracle->mc);
        if (report.oracle->quad) {
            oracle["quad"] = json{{"max_abs_deviation", report.oracle->quad->max_abs_deviation},
                                  {"n_observations", report.oracle->quad->n_observations}};
        }
        doc["oracle"] = oracle;
    }
    doc["input_digest"] = digest;
    return doc.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& json_text) {
    const json doc = json::parse(json_text);
    ReportDocument report;
    report.metric = doc.at("metric").get<std::string>();
    report.classical = doc.at("classical").get<double>();
    report.expected = doc.at("expected").get<double>();
    report.variance = doc.at("variance").get<double>();
    report.std_dev = doc.at("std").get<double>();
    report.correction = doc.at("correction").get<double>();

    const json& mode = doc.at("mode");
    if (mode.contains("homoscedastic")) {
        report.mode.homoscedastic = mode.at("homoscedastic").get<bool>();
    }
    report.mode.paper_compat = mode.at("paper_compat").get<bool>();
    if (mode.contains("variance_convention")) {
        report.mode.variance_convention = mode.at("variance_convention").get<std::string>();
    }

    if (doc.contains("paper_compat_variance")) {
        report.paper_compat_variance = doc.at("paper_compat_variance").get<double>();
    }
    if (doc.contains("oracle")) {
        OracleSection section;
        const json& oracle = doc.at("oracle");
        if (oracle.contains("mc")) section.mc = oracle_report_from_json(oracle.at("mc"));
        if (oracle.contains("quad")) {
            QuadCheckSection quad;
            quad.max_abs_deviation = oracle.at("quad").at("max_abs_deviation").get<double>();
            quad.n_observations = oracle.at("quad").at("n_observations").get<std::int64_t>();
            section.quad = quad;
        }
        report.oracle = section;
    }

    const json& digest = doc.at("input_digest");
    report.input_digest.m = digest.at("m").get<std::int64_t>();
    if (digest.contains("sigma_min")) report.input_digest.sigma_min = digest.at("sigma_min").get<double>();
    if (digest.contains("sigma_max")) report.input_digest.sigma_max = digest.at("sigma_max").get<double>();
    if (digest.contains("sigma_mean")) report.input_digest.sigma_mean = digest.at("sigma_mean").get<double>();
    if (digest.contains("q")) report.input_digest.q = digest.at("q").get<double>();
    if (digest.contains("alpha")) report.input_digest.alpha = digest.at("alpha").get<double>();
    return report;
}

std::string to_text(const ReportDocument& report) {
    std::ostringstream out;
    out << "metric:     " << report.metric << "\n";
    out << "classical:  " << format_double(report.classical) << "\n";
    out << "expected:   " << format_double(report.expected) << "\n";
    out << "variance:   " << format_double(report.variance) << "\n";
    out << "std:        " << format_double(report.std_dev) << "\n";
    out << "correction: " << format_double(report.correction) << "\n";
    if (report.mode.homoscedastic) {
        out << "mode:       " << (*report.mode.homoscedastic ? "constant-sigma" : "heteroscedastic")
            << "\n";
    }
    if (report.mode.variance_convention) {
        out << "variance convention: " << *report.mode.variance_convention << "\n";
    }
    if (report.paper_compat_variance) {
        out << "paper-printed variance (for comparison only): "
            << format_double(*report.paper_compat_variance) << "\n";
    }
    if (report.oracle && report.oracle->mc) {
        const auto& mc = *report.oracle->mc;
        out << "monte carlo: estimate " << format_double(mc.estimate) << " (se "
            << format_double(mc.standard_error) << ", z " << format_double(mc.z_score)
            << ", n " << mc.n_effective << ")\n";
        out << "             variance " << format_double(mc.var_estimate) << " (se "
            << format_double(mc.var_standard_error) << ", z " << format_double(mc.var_z_score)
            << ")\n";
    }
    if (report.oracle && report.oracle->quad) {
        out << "quadrature:  max |integral - closed form| = "
            << format_double(report.oracle->quad->max_abs_deviation) << " over "
            << report.oracle->quad->n_observations << " observations\n";
    }
    out << "input:      M=" << report.input_digest.m;
    if (report.input_digest.sigma_min) {
        out << " sigma[min=" << format_double(*report.input_digest.sigma_min)
            << " max=" << format_double(*report.input_digest.sigma_max)
            << " mean=" << format_double(*report.input_digest.sigma_mean) << "]";
    }
    if (report.input_digest.q) out << " q=" << format_double(*report.input_digest.q);
    if (report.input_digest.alpha) out << " alpha=" << format_double(*report.input_digest.alpha);
    out << "\n";
    return out.str();
}

}  // namespace metricerr
