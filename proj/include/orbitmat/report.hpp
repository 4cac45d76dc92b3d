#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitmat/types.hpp"

namespace orbitmat {

// Everything one analysis run produces. The partition block (degree_m through
// bound_check) is only present in the no-cycle case; det only when the exact
// oracle ran. Serialized field order is fixed; timings are excluded from
// golden comparisons.
struct AnalysisReport {
  std::string spec_text;
  std::int64_t n = 0;
  bool has_cycle = false;
  std::vector<index_t> cycle_elements;  // ordered as in CycleReport; empty unless has_cycle

  std::optional<int> det;  // 0 or 1, oracle mode only

  std::optional<index_t> degree_m;
  std::vector<std::int64_t> partition_pi;
  std::vector<std::int64_t> jnk_counts;  // nnz(M^k) for k = 1..m
  std::optional<std::int64_t> inverse_nnz;
  std::optional<std::int64_t> class_count;
  std::optional<bool> bound_check;  // sum of v*p_v <= n*m - m(m-1)/2

  std::map<std::string, double> timings;  // milliseconds, sorted keys

  bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
  bool verify = false;              // run the dense exact oracle (n <= oracle_bound)
  bool materialize_inverse = true;  // false: report the inverse nonzero count only
  index_t oracle_bound = kDefaultOracleBound;

  std::string json_path;      // write the report when nonempty
  std::string svg_ihat_path;  // plot I - M when nonempty
  std::string svg_inv_path;   // plot the inverse when nonempty (needs materialization, no cycle)
};

AnalysisReport run_analyze(const std::string& spec_text, index_t n,
                           const AnalyzeOptions& options = {});

// Smallest n in [n_min, n_max] whose localization has a cycle. Once found,
// spot-checks that the indicator stays on for larger n in range.
std::optional<index_t> scan_for_cycle(const std::string& spec_text, index_t n_min, index_t n_max);

// Fixed-order JSON with a trailing newline; parse round-trips exactly.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& json_text);

}  // namespace orbitmat
