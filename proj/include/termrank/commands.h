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

#ifndef TERMRANK_COMMANDS_H_
#define TERMRANK_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "termrank/cover.h"
#include "termrank/io.h"

namespace termrank {

struct Outcome {
  bool feasible = false;
  std::optional<ViolationCert> cert;
  // Set by RunSolve on feasible instances. Brualdi mode has no graph.
  std::optional<Bigraph> graph;
  std::optional<std::vector<Edge>> matching;
  long max_excess = 0;
  std::uint64_t evaluated = 0;
};

// M_S free and p_T zero: the plain degree-constrained subgraph problem.
Instance PlainInstance(const Instance& inst);

// M_S, M_T uniform of rank l and p_T the co-rank of M_T.
Instance UniformInstance(const Instance& inst, int ell);

// Runs the checker that belongs to the file's mode.
Outcome RunCheck(const InstanceFile& file);

// Constructs a witness or returns the checker's certificate. When route is
// unset, ms_only uses the brute route and every other mode the cover route.
Outcome RunSolve(const InstanceFile& file, std::optional<Route> route);

Json OutcomeToJson(const InstanceFile& file, const Outcome& outcome,
                   std::optional<double> wall_ms = std::nullopt);

// Checks the witness of a result file against the instance: fit, simple
// union, M_S-covering and the basis-covering matching where they apply.
// Returns a description of the first failure.
std::optional<std::string> ValidateWitness(const InstanceFile& file,
                                           const Json& result);

}  // namespace termrank

#endif  // TERMRANK_COMMANDS_H_
