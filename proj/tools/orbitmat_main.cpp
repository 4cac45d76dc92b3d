// orbitmat: cycle indicators, height partitions, and sparse inverses for
// iterations of fixed-point-free integer functions.
//
// Exit codes: 0 analyzed with no cycle, 3 analyzed with a cycle found,
// 1 usage/parse error, 2 overflow or size-limit error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orbitmat/bigint.hpp"
#include "orbitmat/errors.hpp"
#include "orbitmat/function_spec.hpp"
#include "orbitmat/local_function.hpp"
#include "orbitmat/matrix.hpp"
#include "orbitmat/oracle.hpp"
#include "orbitmat/orbit.hpp"
#include "orbitmat/report.hpp"
#include "orbitmat/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCycle = 3;

int run_analyze_command(const std::string& fn, std::int64_t n, orbitmat::AnalyzeOptions options) {
  if (n < 1 || n > static_cast<std::int64_t>(orbitmat::kMaxDomain)) {
    throw orbitmat::Error(orbitmat::ErrorCode::InvalidArgument, "--n out of range");
  }
  const auto report = orbitmat::run_analyze(fn, static_cast<orbitmat::index_t>(n), options);
  std::cout << orbitmat::report_to_json(report);
  return report.has_cycle ? kExitCycle : kExitOk;
}

int run_scan_command(const std::string& fn, std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 1 || n_max < n_min || n_max > static_cast<std::int64_t>(orbitmat::kMaxDomain)) {
    throw orbitmat::Error(orbitmat::ErrorCode::InvalidArgument, "scan range out of order");
  }
  const auto first = orbitmat::scan_for_cycle(fn, static_cast<orbitmat::index_t>(n_min),
                                              static_cast<orbitmat::index_t>(n_max));
  std::cout << "{\n  \"spec_text\": \"" << fn << "\",\n  \"n_min\": " << n_min
            << ",\n  \"n_max\": " << n_max << ",\n  \"first_cycle_n\": "
            << (first ? std::to_string(*first) : "null") << "\n}\n";
  return first ? kExitCycle : kExitOk;
}

int run_oracle_command(const std::string& fn, std::int64_t n, std::int64_t bound) {
  if (n < 1 || n > bound) {
    throw orbitmat::Error(orbitmat::ErrorCode::SizeLimitExceeded,
                          "oracle runs are capped at n = " + std::to_string(bound));
  }
  const auto spec = orbitmat::parse_spec(fn);
  const auto lf = orbitmat::localize(spec, static_cast<orbitmat::index_t>(n));
  const auto ihat = orbitmat::build_ihat(lf);
  const auto det = orbitmat::bareiss_det(orbitmat::dense_from_sparse(ihat));

  bool inverse_verified = false;
  if (det == orbitmat::BigInt(1)) {
    const auto profile = orbitmat::heights(lf);
    const auto inv = orbitmat::inverse_via_orbits(lf, profile);
    inverse_verified = orbitmat::verify_inverse(ihat, inv, static_cast<orbitmat::index_t>(bound));
  }
  std::cout << "{\n  \"spec_text\": \"" << fn << "\",\n  \"n\": " << n << ",\n  \"det\": "
            << det.to_string() << ",\n  \"inverse_verified\": "
            << (inverse_verified ? "true" : "false") << "\n}\n";
  return det == orbitmat::BigInt(0) ? kExitCycle : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iteration analysis of fixed-point-free integer functions"};
  app.require_subcommand(1);

  std::string fn;
  std::int64_t n = 0, n_min = 0, n_max = 0;
  std::int64_t oracle_bound = orbitmat::kDefaultOracleBound;
  orbitmat::AnalyzeOptions options;
  bool no_materialize = false;

  auto* analyze = app.add_subcommand("analyze", "Full analysis of one localized function");
  analyze->add_option("--fn", fn, "Function spec, e.g. \"collatz\" or \"shift:t=1\"")->required();
  analyze->add_option("--n", n, "Domain bound")->required();
  analyze->add_option("--json", options.json_path, "Also write the JSON report to this path");
  analyze->add_option("--svg-ihat", options.svg_ihat_path, "Write a sparsity plot of I - M");
  analyze->add_option("--svg-inv", options.svg_inv_path, "Write a sparsity plot of the inverse");
  analyze->add_flag("--verify", options.verify, "Run the dense exact oracle (n <= oracle bound)");
  analyze->add_flag("--no-materialize-inverse", no_materialize,
                    "Report the inverse nonzero count without storing its entries");
  analyze->add_option("--oracle-bound", oracle_bound, "Dense verification size cap");

  auto* scan = app.add_subcommand("scan", "Find the smallest n in a range whose localization has a cycle");
  scan->add_option("--fn", fn, "Function spec")->required();
  scan->add_option("--n-min", n_min, "Lower bound")->required();
  scan->add_option("--n-max", n_max, "Upper bound")->required();

  auto* oracle = app.add_subcommand("oracle", "Determinant indicator and inverse verification only");
  oracle->add_option("--fn", fn, "Function spec")->required();
  oracle->add_option("--n", n, "Domain bound")->required();
  oracle->add_option("--oracle-bound", oracle_bound, "Dense verification size cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      options.materialize_inverse = !no_materialize;
      options.oracle_bound = static_cast<orbitmat::index_t>(oracle_bound);
      return run_analyze_command(fn, n, options);
    }
    if (app.got_subcommand(scan)) {
      return run_scan_command(fn, n_min, n_max);
    }
    return run_oracle_command(fn, n, oracle_bound);
  } catch (const orbitmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
