#include "metricerr/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "metricerr/summation.hpp"

namespace metricerr {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t row, const std::string& what) {
    throw std::invalid_argument(path + ": row " + std::to_string(row) + ": " + what);
}

std::vector<std::string> split_fields(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_number(const std::string& path, std::size_t row, const std::string& column,
                    const std::string& field) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        fail(path, row, "column '" + column + "': non-numeric value '" + field + "'");
    }
    if (!std::isfinite(value)) {
        fail(path, row, "column '" + column + "': non-finite value '" + field + "'");
    }
    return value;
}

int parse_binary_label(const std::string& path, std::size_t row, const std::string& field) {
    if (field == "0") return 0;
    if (field == "1") return 1;
    fail(path, row, "column 'y': label must be 0 or 1, got '" + field + "'");
}

// Reads all rows, validating the header against the expected column names
// (any order, no extras, no duplicates). Returns per-row fields reordered to
// the expected column order, paired with the physical row number (header is
// row 1).
using Row = std::pair<std::size_t, std::vector<std::string>>;

std::vector<Row> read_table(const std::string& path, const std::vector<std::string>& columns) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument(path + ": cannot open file");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument(path + ": missing header row");
    }
    const auto header = split_fields(line);
    std::vector<std::size_t> order(columns.size());
    if (header.size() != columns.size()) {
        std::ostringstream expected;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            expected << (i ? "," : "") << columns[i];
        }
        throw std::invalid_argument(path + ": row 1: expected header columns '" +
                                    expected.str() + "'");
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (header[j] == columns[i]) {
                order[i] = j;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument(path + ": row 1: missing column '" + columns[i] + "'");
        }
    }

    std::vector<Row> rows;
    std::size_t row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        auto fields = split_fields(line);
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != columns.size()) {
            fail(path, row_number,
                 "expected " + std::to_string(columns.size()) + " fields, got " +
                     std::to_string(fields.size()));
        }
        std::vector<std::string> ordered(columns.size());
        for (std::size_t i = 0; i < columns.size(); ++i) ordered[i] = fields[order[i]];
        rows.emplace_back(row_number, std::move(ordered));
    }
    return rows;
}

}  // namespace

std::vector<ReducedObservation> reduce_replicates(const ReplicateTable& table,
                                                  std::optional<double> fallback_sigma) {
    std::vector<ReducedObservation> reduced;
    reduced.reserve(table.groups.size());
    for (const auto& group : table.groups) {
        if (group.values.empty()) {
            throw std::invalid_argument("replicate table: observation '" + group.id +
                                        "' has no replicates");
        }
        for (double v : group.values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("replicate table: observation '" + group.id +
                                            "' has a non-finite replicate");
            }
        }
        const double n = static_cast<double>(group.values.size());
        const double mean = compensated_total(group.values) / n;
        double sigma = 0.0;
        if (group.values.size() == 1) {
            if (!fallback_sigma) {
                throw std::invalid_argument(
                    "observation '" + group.id +
                    "' has a single replicate; supply a fallback sigma from error propagation");
            }
            sigma = *fallback_sigma;
            if (!std::isfinite(sigma) || sigma < 0.0) {
                throw std::invalid_argument("fallback sigma must be finite and >= 0");
            }
        } else {
            CompensatedSum sq;
            for (double v : group.values) {
                const double d = v - mean;
                sq.add(d * d);
            }
            sigma = std::sqrt(std::max(0.0, sq.value() / (n - 1.0)));
        }
        reduced.push_back({group.id, mean, sigma});
    }
    return reduced;
}

namespace {

RegressionDataset load_summary(const std::string& path) {
    const auto rows = read_table(path, {"id", "y_hat", "y_bar", "sigma"});
    std::vector<RegressionObservation> observations;
    std::unordered_set<std::string> ids;
    for (const auto& [row, fields] : rows) {
        if (!ids.insert(fields[0]).second) {
            fail(path, row, "duplicate observation id '" + fields[0] + "'");
        }
        RegressionObservation obs;
        obs.y_hat = parse_number(path, row, "y_hat", fields[1]);
        obs.y_bar = parse_number(path, row, "y_bar", fields[2]);
        obs.sigma = parse_number(path, row, "sigma", fields[3]);
        if (obs.sigma < 0.0) {
            fail(path, row, "negative sigma " + fields[3]);
        }
        observations.push_back(obs);
    }
    if (observations.empty()) {
        throw std::invalid_argument(path + ": empty dataset");
    }
    return RegressionDataset(std::move(observations));
}

RegressionDataset load_replicates(const std::string& path, const std::string& predictions_path,
                                  std::optional<double> fallback_sigma) {
    const auto rows = read_table(path, {"id", "replicate"});
    ReplicateTable table;
    std::unordered_map<std::string, std::size_t> group_index;
    for (const auto& [row, fields] : rows) {
        const double value = parse_number(path, row, "replicate", fields[1]);
        const auto [it, inserted] = group_index.emplace(fields[0], table.groups.size());
        if (inserted) {
            table.groups.push_back({fields[0], {}});
        }
        table.groups[it->second].values.push_back(value);
    }
    if (table.groups.empty()) {
        throw std::invalid_argument(path + ": empty dataset");
    }

    const auto prediction_rows = read_table(predictions_path, {"id", "y_hat"});
    std::unordered_map<std::string, double> predictions;
    for (const auto& [row, fields] : prediction_rows) {
        const double y_hat = parse_number(predictions_path, row, "y_hat", fields[1]);
        if (!predictions.emplace(fields[0], y_hat).second) {
            fail(predictions_path, row, "duplicate observation id '" + fields[0] + "'");
        }
        if (!group_index.contains(fields[0])) {
            fail(predictions_path, row,
                 "prediction for unknown observation id '" + fields[0] + "'");
        }
    }

    std::vector<RegressionObservation> observations;
    for (const auto& reduced : reduce_replicates(table, fallback_sigma)) {
        const auto it = predictions.find(reduced.id);
        if (it == predictions.end()) {
            throw std::invalid_argument(predictions_path + ": missing prediction for observation '" +
                                        reduced.id + "'");
        }
        observations.push_back({it->second, reduced.y_bar, reduced.sigma});
    }
    return RegressionDataset(std::move(observations));
}

}  // namespace

RegressionDataset load_regression_csv(const std::string& path, RegressionSchema schema,
                                      const std::optional<std::string>& predictions_path,
                                      std::optional<double> fallback_sigma) {
    if (schema == RegressionSchema::kSummary) {
        return load_summary(path);
    }
    if (!predictions_path) {
        throw std::invalid_argument("replicates schema requires a predictions file");
    }
    return load_replicates(path, *predictions_path, fallback_sigma);
}

ClassificationDataset load_classification_csv(const std::string& path, double alpha,
                                              double flip_probability) {
    const auto rows = read_table(path, {"id", "y", "p_hat"});
    std::vector<ClassificationObservation> observations;
    std::unordered_set<std::string> ids;
    for (const auto& [row, fields] : rows) {
        if (!ids.insert(fields[0]).second) {
            fail(path, row, "duplicate observation id '" + fields[0] + "'");
        }
        ClassificationObservation obs;
        obs.y = parse_binary_label(path, row, fields[1]);
        obs.p_hat = parse_number(path, row, "p_hat", fields[2]);
        if (obs.p_hat < 0.0 || obs.p_hat > 1.0) {
            fail(path, row, "column 'p_hat': probability out of [0, 1]: " + fields[2]);
        }
        observations.push_back(obs);
    }
    if (observations.empty()) {
        throw std::invalid_argument(path + ": empty dataset");
    }
    return ClassificationDataset(std::move(observations), alpha, flip_probability);
}

}  // namespace metricerr
