// orelab: exact computer algebra for Ore monoid rings R[G;pi].
// Subcommands: check (axioms + classification), mul (product of two
// elements), center (Z(S) and Z(S)^G within a cap), simple (simplicity
// deciders). Exit codes for `simple`: 0 simple, 1 not simple, 2 unknown,
// 3 hypotheses not met. Parse/usage errors exit 4, internal errors 5.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orelab/config.hpp"

namespace {

int emit(const orelab::CommandResult& res, const std::string& json_out,
         std::chrono::steady_clock::time_point start) {
  if (json_out != "-") std::cout << res.human;
  if (!json_out.empty()) {
    if (json_out == "-") {
      std::cout << res.report.dump(2) << "\n";
    } else {
      std::ofstream out(json_out);
      if (!out) {
        std::cerr << "cannot write " << json_out << "\n";
        return 4;
      }
      out << res.report.dump(2) << "\n";
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cerr << "elapsed: " << ms << " ms\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orelab: Ore monoid rings over exact coefficient algebras"};
  app.require_subcommand(1);

  std::string config_path, json_out, lhs, rhs, strategy;
  std::uint64_t cap = 0;
  bool cap_set = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "problem config (JSON)")->required();
    cmd->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  };

  CLI::App* c_check = app.add_subcommand("check", "verify axioms D0-D8 and classify pi");
  add_common(c_check);
  c_check->add_option("--cap", cap, "weight cap for N^k quantifiers")->each([&](const std::string&) { cap_set = true; });

  CLI::App* c_mul = app.add_subcommand("mul", "multiply two elements of S");
  add_common(c_mul);
  c_mul->add_option("--lhs", lhs, "left factor")->required();
  c_mul->add_option("--rhs", rhs, "right factor")->required();

  CLI::App* c_center = app.add_subcommand("center", "basis of Z(S) and Z(S)^G within a cap");
  add_common(c_center);
  c_center->add_option("--cap", cap, "support weight cap")->each([&](const std::string&) { cap_set = true; });

  CLI::App* c_simple = app.add_subcommand("simple", "decide simplicity of S");
  add_common(c_simple);
  c_simple->add_option("--strategy", strategy, "auto|brute|theorem|witness");
  c_simple->add_option("--cap", cap, "weight cap override")->each([&](const std::string&) { cap_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    orelab::ProblemConfig cfg = orelab::ProblemConfig::from_file(config_path);
    if (cap_set) cfg.caps.weight_cap = cap;
    if (c_check->parsed()) return emit(orelab::run_check(cfg), json_out, start);
    if (c_mul->parsed()) return emit(orelab::run_mul(cfg, lhs, rhs), json_out, start);
    if (c_center->parsed())
      return emit(orelab::run_center(cfg, cap_set ? cap : cfg.caps.weight_cap),
                  json_out, start);
    if (c_simple->parsed()) {
      std::string strat = strategy.empty() ? cfg.strategy : strategy;
      return emit(orelab::run_simple(cfg, strat), json_out, start);
    }
  } catch (const orelab::Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case orelab::ErrorCode::hypotheses_not_met:
      case orelab::ErrorCode::unsupported_base:
      case orelab::ErrorCode::not_ore_ring:
      case orelab::ErrorCode::invalid_monoid:
        return 3;
      case orelab::ErrorCode::internal:
        return 5;
      default:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 4;
}
