// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// termrank: check, solve and fuzz degree-specified bigraph problems.
//
// Exit codes: 0 feasible / no discrepancies, 1 infeasible / discrepancies,
// 2 input error, 3 internal identity failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "termrank/acceptance.h"
#include "termrank/commands.h"
#include "termrank/error.h"
#include "termrank/harness.h"

namespace {

using termrank::Json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::optional<termrank::Mode> ParseMode(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto mode = termrank::ModeFromName(name);
  if (!mode) {
    throw termrank::Error(termrank::ErrorCode::kInvalidInput,
                          "--mode: unknown mode '" + name + "'");
  }
  return mode;
}

void Emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(out);
  if (!file) {
    throw termrank::Error(termrank::ErrorCode::kInvalidInput,
                          out + ": cannot write");
  }
  file << j.dump(2) << "\n";
}

Json LoadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw termrank::Error(termrank::ErrorCode::kInvalidInput,
                          path + ": cannot open");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw termrank::Error(termrank::ErrorCode::kInvalidInput,
                          path + ": malformed JSON: " + e.what());
  }
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct CheckArgs {
  std::string file;
  std::string mode;
  std::string out;
  std::string witness;
  bool timing = false;
};

int RunCheckCommand(const CheckArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const termrank::InstanceFile file =
      termrank::LoadInstanceFile(a.file, ParseMode(a.mode));
  const termrank::Outcome outcome = termrank::RunCheck(file);
  Json result = termrank::OutcomeToJson(
      file, outcome,
      a.timing ? std::optional<double>(MillisSince(start)) : std::nullopt);
  int code = outcome.feasible ? kExitOk : kExitNo;
  if (!a.witness.empty()) {
    const auto failure = termrank::ValidateWitness(file, LoadJson(a.witness));
    result["witness_valid"] = !failure.has_value();
    if (failure) {
      result["witness_error"] = *failure;
      code = kExitNo;
    }
  }
  Emit(result, a.out);
  return code;
}

struct SolveArgs {
  std::string file;
  std::string mode;
  std::string route;
  std::string out;
  bool timing = false;
};

int RunSolveCommand(const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const termrank::InstanceFile file =
      termrank::LoadInstanceFile(a.file, ParseMode(a.mode));
  std::optional<termrank::Route> route;
  if (a.route == "cover") route = termrank::Route::kCover;
  if (a.route == "brute") route = termrank::Route::kBrute;
  if (a.route == "both") route = termrank::Route::kBoth;
  const termrank::Outcome outcome = termrank::RunSolve(file, route);
  Emit(termrank::OutcomeToJson(
           file, outcome,
           a.timing ? std::optional<double>(MillisSince(start)) : std::nullopt),
       a.out);
  return outcome.feasible ? kExitOk : kExitNo;
}

struct FuzzArgs {
  std::uint64_t seed = 1;
  int count = 100;
  int max_s = 4;
  int max_t = 4;
  int max_degree = 3;
  std::vector<std::string> modes = {"msmt"};
  int jobs = 1;
  bool inject_fault = false;
  std::string repro_dir = "termrank-repro";
  std::string out;
};

int RunFuzzCommand(const FuzzArgs& a) {
  termrank::FuzzOptions options;
  options.seed = a.seed;
  options.count = a.count;
  options.limits.max_s = a.max_s;
  options.limits.max_t = a.max_t;
  options.limits.max_degree = a.max_degree;
  options.modes.clear();
  for (const std::string& m : a.modes) {
    if (m == "all") {
      for (const char* name : {"ore", "msmt", "ms_only", "fully", "ryser",
                               "brualdi", "ryser_gen"}) {
        options.modes.push_back(*termrank::ModeFromName(name));
      }
      continue;
    }
    options.modes.push_back(*ParseMode(m));
  }
  options.jobs = a.jobs;
  options.inject_fault = a.inject_fault;
  options.repro_dir = a.repro_dir;
  const termrank::FuzzReport report = termrank::RunFuzz(options);
  Emit(report.json, a.out);
  return report.discrepancies == 0 ? kExitOk : kExitNo;
}

int RunSelftestCommand(std::uint64_t seed) {
  termrank::AcceptanceOptions options;
  options.seed = seed;
  const auto results = termrank::RunAcceptanceSuite(options);
  termrank::PrintAcceptance(results, std::cout);
  for (const auto& r : results) {
    if (!r.pass) return kExitNo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-specified bigraph synthesis with matroid constraints"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the mode's checker");
  check_cmd->add_option("file", check.file, "Instance JSON")->required();
  check_cmd->add_option("--mode", check.mode, "Override the instance mode");
  check_cmd->add_option("--out", check.out, "Write the result here");
  check_cmd->add_option("--witness", check.witness,
                        "Re-validate the witness of a result file");
  check_cmd->add_flag("--timing", check.timing, "Report wall time");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Construct a witness");
  solve_cmd->add_option("file", solve.file, "Instance JSON")->required();
  solve_cmd->add_option("--mode", solve.mode, "Override the instance mode");
  solve_cmd->add_option("--route", solve.route, "Constructor route")
      ->check(CLI::IsMember({"cover", "brute", "both"}));
  solve_cmd->add_option("--out", solve.out, "Write the result here");
  solve_cmd->add_flag("--timing", solve.timing, "Report wall time");

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized cross-checking");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Generator seed");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances")
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--max-s", fuzz.max_s, "Largest |S|")
      ->check(CLI::Range(1, 12));
  fuzz_cmd->add_option("--max-t", fuzz.max_t, "Largest |T|")
      ->check(CLI::Range(1, 12));
  fuzz_cmd->add_option("--max-degree", fuzz.max_degree, "Largest degree")
      ->check(CLI::Range(0, 12));
  fuzz_cmd->add_option("--modes", fuzz.modes, "Modes to fuzz, or 'all'")
      ->delimiter(',');
  fuzz_cmd->add_option("--jobs", fuzz.jobs, "Worker threads")
      ->check(CLI::Range(1, 64));
  fuzz_cmd->add_flag("--inject-fault", fuzz.inject_fault,
                     "Use a strict inequality in the checker verdict");
  fuzz_cmd->add_option("--repro-dir", fuzz.repro_dir,
                       "Directory for minimized reproducers");
  fuzz_cmd->add_option("--out", fuzz.out, "Write the report here");

  std::uint64_t selftest_seed = termrank::AcceptanceOptions{}.seed;
  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the built-in acceptance suite");
  selftest_cmd->add_option("--seed", selftest_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check_cmd) return RunCheckCommand(check);
    if (*solve_cmd) return RunSolveCommand(solve);
    if (*fuzz_cmd) return RunFuzzCommand(fuzz);
    if (*selftest_cmd) return RunSelftestCommand(selftest_seed);
  } catch (const termrank::Error& e) {
    std::cerr << "error [" << termrank::ErrorCodeName(e.code())
              << "]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
