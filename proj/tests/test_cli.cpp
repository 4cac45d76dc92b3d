#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef ORBITMAT_BIN
#error "ORBITMAT_BIN must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "orbitmat_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  const auto out_path = scratch_dir() / "stdout.txt";
  const std::string command =
      std::string(ORBITMAT_BIN) + " " + args + " > " + out_path.string() + " 2> /dev/null";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.stdout_text = slurp(out_path);
  return result;
}

}  // namespace

TEST_CASE("analyze exits 0 on the no-cycle case and reports the counts") {
  const auto run = run_cli("analyze --fn collatz --n 50 --verify");
  CHECK(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.stdout_text);
  CHECK(report.at("inverse_nnz") == 348);
  CHECK(report.at("degree_m") == 18);
  CHECK(report.at("det") == 1);
}

TEST_CASE("analyze exits 3 when a cycle is found") {
  const auto run = run_cli("analyze --fn \"table:1>2,2>1\" --n 2 --verify");
  CHECK(run.exit_code == 3);
  const auto report = nlohmann::json::parse(run.stdout_text);
  CHECK(report.at("has_cycle") == true);
  CHECK(report.at("det") == 0);
}

TEST_CASE("parse errors exit 1") {
  CHECK(run_cli("analyze --fn bogus --n 5").exit_code == 1);
  CHECK(run_cli("analyze --fn shift:t=0 --n 5").exit_code == 1);
  CHECK(run_cli("analyze --fn collatz").exit_code != 0);  // missing --n
}

TEST_CASE("limit violations exit 2") {
  CHECK(run_cli("analyze --fn collatz --n 600 --verify").exit_code == 2);
  CHECK(run_cli("oracle --fn collatz --n 600").exit_code == 2);
  const auto overflow = run_cli("analyze --fn shift:t=9223372036854775806 --n 5");
  CHECK(overflow.exit_code == 2);
}

TEST_CASE("scan reports the first cycle-bearing bound") {
  const auto run = run_cli("scan --fn \"rcwa:mod=2;0:1,0;1:3,-1;cut=2\" --n-min 2 --n-max 64");
  CHECK(run.exit_code == 3);
  const auto report = nlohmann::json::parse(run.stdout_text);
  CHECK(report.at("first_cycle_n") == 10);

  const auto clean = run_cli("scan --fn collatz --n-min 2 --n-max 100");
  CHECK(clean.exit_code == 0);
  CHECK(nlohmann::json::parse(clean.stdout_text).at("first_cycle_n").is_null());
}

TEST_CASE("oracle subcommand prints the indicator") {
  const auto run = run_cli("oracle --fn collatz --n 50");
  CHECK(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.stdout_text);
  CHECK(report.at("det") == 1);
  CHECK(report.at("inverse_verified") == true);

  const auto cyclic = run_cli("oracle --fn \"table:1>2,2>1\" --n 2");
  CHECK(cyclic.exit_code == 3);
  CHECK(nlohmann::json::parse(cyclic.stdout_text).at("det") == 0);
}

TEST_CASE("json and svg files are written and byte-stable") {
  const auto dir = scratch_dir();
  const auto json_a = dir / "a.json";
  const auto json_b = dir / "b.json";
  const auto svg_ihat_a = dir / "ihat_a.svg";
  const auto svg_ihat_b = dir / "ihat_b.svg";
  const auto svg_inv = dir / "inv.svg";

  const std::string base = "analyze --fn shift:t=-7 --n 50 --json ";
  CHECK(run_cli(base + json_a.string() + " --svg-ihat " + svg_ihat_a.string() + " --svg-inv " +
                svg_inv.string())
            .exit_code == 0);
  CHECK(run_cli(base + json_b.string() + " --svg-ihat " + svg_ihat_b.string()).exit_code == 0);

  CHECK(slurp(svg_ihat_a) == slurp(svg_ihat_b));
  CHECK(slurp(svg_ihat_a).substr(0, 4) == "<svg");
  CHECK(slurp(svg_inv).find("#d62728") != std::string::npos);

  // Reports differ only in timings.
  auto a = nlohmann::json::parse(slurp(json_a));
  auto b = nlohmann::json::parse(slurp(json_b));
  a.erase("timings");
  b.erase("timings");
  CHECK(a == b);
  CHECK(a.at("inverse_nnz") == 204);  // column j holds ceil(j/7) ones: 7*(1+..+7) + 8
}
