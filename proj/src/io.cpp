#include "berncov/io.hpp"

#include <fstream>
#include <stdexcept>

namespace berncov {

namespace {

Rational fraction_field(const nlohmann::json& j, const char* where) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(where) +
                                ": fractions must be strings like \"3/8\"");
  return parse_rational(j.get<std::string>());
}

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

std::vector<std::string> fraction_strings(const VectorXq& values) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i)
    out.push_back(format_fraction(values(i)));
  return out;
}

}  // namespace

nlohmann::ordered_json count_pmf_json(const CountPmf& pmf) {
  return {{"n", pmf.n()}, {"f", fraction_strings(pmf.weights())}};
}

CountPmf parse_count_pmf(const nlohmann::json& j) {
  const int n = int_field(j, "n");
  if (!j.contains("f") || !j.at("f").is_array())
    throw std::invalid_argument("CountPmf JSON: missing array field \"f\"");
  const auto& f = j.at("f");
  if (static_cast<int>(f.size()) != n + 1)
    throw std::invalid_argument("CountPmf JSON: \"f\" must have n + 1 entries");
  VectorXq weights(n + 1);
  for (int k = 0; k <= n; ++k) weights(k) = fraction_field(f.at(k), "CountPmf JSON");
  return CountPmf(n, std::move(weights));
}

nlohmann::ordered_json full_pmf_json(const FullPmf& pmf) {
  return {{"n", pmf.n()}, {"g", fraction_strings(pmf.masses())}};
}

FullPmf parse_full_pmf(const nlohmann::json& j) {
  const int n = int_field(j, "n");
  if (n < 2 || n > FullPmf::kMaxN)
    throw std::invalid_argument("FullPmf JSON: n out of range");
  if (!j.contains("g") || !j.at("g").is_array())
    throw std::invalid_argument("FullPmf JSON: missing array field \"g\"");
  const auto& g = j.at("g");
  const std::size_t size = std::size_t{1} << n;
  if (g.size() != size)
    throw std::invalid_argument("FullPmf JSON: \"g\" must have 2^n entries");
  VectorXq masses(static_cast<Eigen::Index>(size));
  for (std::size_t x = 0; x < size; ++x)
    masses(static_cast<Eigen::Index>(x)) = fraction_field(g.at(x), "FullPmf JSON");
  return FullPmf(n, std::move(masses));
}

nlohmann::ordered_json feasibility_report_json(const FeasibilityReport& report,
                                               bool decimal) {
  nlohmann::ordered_json j{{"n", report.n},
                           {"p", format_fraction(report.p)},
                           {"rho", format_fraction(report.rho)},
                           {"good", report.good},
                           {"symmetric_binary_good", report.symmetric_binary_good},
                           {"p_psd_threshold", format_fraction(report.p_psd_threshold)},
                           {"p_min_binary", format_fraction(report.p_min_binary)}};
  if (decimal) {
    j["p_decimal"] = to_double(report.p);
    j["rho_decimal"] = to_double(report.rho);
    j["p_psd_threshold_decimal"] = to_double(report.p_psd_threshold);
    j["p_min_binary_decimal"] = to_double(report.p_min_binary);
  }
  return j;
}

nlohmann::ordered_json covariance_json(const MatrixXq& matrix, bool decimal) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  nlohmann::ordered_json rows_decimal = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    nlohmann::ordered_json row_decimal = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      row.push_back(format_fraction(matrix(i, j)));
      if (decimal) row_decimal.push_back(to_double(matrix(i, j)));
    }
    rows.push_back(std::move(row));
    if (decimal) rows_decimal.push_back(std::move(row_decimal));
  }
  nlohmann::ordered_json j{{"n", matrix.rows()}, {"entries", std::move(rows)}};
  if (decimal) j["entries_decimal"] = std::move(rows_decimal);
  return j;
}

nlohmann::ordered_json threshold_report_json(const std::vector<ThresholdCheck>& checks,
                                             bool include_full, bool decimal) {
  bool all_pass = true;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const ThresholdCheck& check : checks) {
    nlohmann::ordered_json record{{"n", check.n},
                                  {"closed_form", format_fraction(check.closed_form)},
                                  {"lp_optimum", format_fraction(check.lp_optimum)}};
    if (check.full_lp_optimum)
      record["full_lp_optimum"] = format_fraction(*check.full_lp_optimum);
    if (decimal) record["closed_form_decimal"] = to_double(check.closed_form);
    record["pass"] = check.pass;
    all_pass = all_pass && check.pass;
    results.push_back(std::move(record));
  }
  return {{"n_max", checks.empty() ? 1 : checks.back().n},
          {"full", include_full},
          {"all_pass", all_pass},
          {"results", std::move(results)}};
}

nlohmann::ordered_json stats_json(const EmpiricalStats& stats) {
  const Eigen::Index n = stats.coordinate_means.size();
  nlohmann::ordered_json means = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) means.push_back(stats.coordinate_means(i));
  nlohmann::ordered_json agreement = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < n; ++j) row.push_back(stats.pair_agreement(i, j));
    agreement.push_back(std::move(row));
  }
  return {{"coordinate_means", std::move(means)},
          {"mean_agreement", stats.mean_agreement},
          {"pair_agreement", std::move(agreement)}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << contents;
}

}  // namespace berncov
