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

#ifndef TERMRANK_HARNESS_H_
#define TERMRANK_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "termrank/io.h"

namespace termrank {

using Rng = std::mt19937_64;

// Per-instance generator; instance i of a run with seed n uses
// InstanceRng(n, i) so the output does not depend on scheduling.
Rng InstanceRng(std::uint64_t seed, std::uint64_t index);

int UniformInt(Rng& rng, int lo, int hi);

// Free, uniform or partition matroid; exactly `rank` when given.
Matroid RandomMatroid(Rng& rng, const std::vector<std::string>& ground,
                      std::optional<int> rank = std::nullopt);

// Co-rank of a random matroid, optionally truncated as (p - c)^+.
SetFunction RandomDemand(Rng& rng, const std::vector<std::string>& ground,
                         bool allow_truncation);

struct GeneratorLimits {
  int max_s = 4;
  int max_t = 4;
  int max_degree = 3;
  int max_brualdi_edges = 12;
  int max_brualdi_rank = 3;
};

InstanceFile RandomInstance(Rng& rng, Mode mode, const GeneratorLimits& limits);

// Cross-checks every route of the mode against the others. Returns a
// description of the first disagreement. With inject_fault the checker
// verdict uses a strict inequality, which must be caught.
std::optional<std::string> CrossCheck(const InstanceFile& file,
                                      bool inject_fault = false);

// Greedy shrink: drop H0 edges, decrement paired degrees and delete
// zero-degree nodes while `still_fails` holds and the instance stays valid.
InstanceFile Minimize(
    InstanceFile file,
    const std::function<bool(const InstanceFile&)>& still_fails);

struct FuzzOptions {
  std::uint64_t seed = 1;
  int count = 100;
  GeneratorLimits limits;
  std::vector<Mode> modes = {Mode::kMsmt};
  int jobs = 1;
  bool inject_fault = false;
  // Minimized reproducers are written here when non-empty.
  std::string repro_dir;
};

struct FuzzReport {
  Json json;
  int discrepancies = 0;
};

FuzzReport RunFuzz(const FuzzOptions& options);

}  // namespace termrank

#endif  // TERMRANK_HARNESS_H_
