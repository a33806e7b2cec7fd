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

#ifndef TERMRANK_ACCEPTANCE_H_
#define TERMRANK_ACCEPTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace termrank {

struct AcceptanceOptions {
  std::uint64_t seed = 20261018;
  int msmt_instances = 2000;
  int ore_random = 2000;
  int brualdi_instances = 1000;
  int lattice_instances = 1000;
  int ryser_prefix_random = 2000;
  // Every degree specification up to this side, up to relabeling.
  int ryser_prefix_side = 6;
  // Largest side for the exhaustive Ore sweep: every H0 up to relabeling
  // of S and T, every degree vector with entries <= 4.
  int ore_exhaustive_side = 4;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> RunAcceptanceSuite(const AcceptanceOptions& options);

// One "PASS|FAIL <id> <name>: <detail>" line per criterion.
void PrintAcceptance(const std::vector<CriterionResult>& results,
                     std::ostream& out);

}  // namespace termrank

#endif  // TERMRANK_ACCEPTANCE_H_
