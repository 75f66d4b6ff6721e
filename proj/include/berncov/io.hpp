#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "berncov/constructors.hpp"
#include "berncov/count_pmf.hpp"
#include "berncov/lp_oracle.hpp"
#include "berncov/sampler.hpp"

namespace berncov {

// All machine-readable probability fields are lowest-terms fraction strings
// ("num/den"); JSON numbers would silently round. Decimal renderings are
// opt-in, presentation-only siblings.

/// {"n": <int>, "f": ["num/den", ...]} with exactly n+1 entries.
nlohmann::ordered_json count_pmf_json(const CountPmf& pmf);
CountPmf parse_count_pmf(const nlohmann::json& j);

/// {"n": <int>, "g": ["num/den", ...]} of length 2^n; coordinate 1 is the
/// least-significant bit of the index.
nlohmann::ordered_json full_pmf_json(const FullPmf& pmf);
FullPmf parse_full_pmf(const nlohmann::json& j);

nlohmann::ordered_json feasibility_report_json(const FeasibilityReport& report,
                                               bool decimal = false);

/// {"n": <int>, "entries": [["num/den", ...], ...]}.
nlohmann::ordered_json covariance_json(const MatrixXq& matrix, bool decimal = false);

nlohmann::ordered_json threshold_report_json(const std::vector<ThresholdCheck>& checks,
                                             bool include_full, bool decimal = false);

nlohmann::ordered_json stats_json(const EmpiricalStats& stats);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace berncov
