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

#include "termrank/matroid.h"

#include <algorithm>
#include <sstream>

#include "termrank/error.h"

namespace termrank {

namespace {

void CheckGroundSize(const std::vector<std::string>& ground) {
  if (static_cast<int>(ground.size()) > kHardMaxGround) {
    throw Error(ErrorCode::kInvalidInput, "matroid ground set too large");
  }
}

// Inserts a zero bit at `index`, shifting the higher bits up by one.
Mask SpreadIn(Mask m, int index) {
  Mask low = m & FullMask(index);
  Mask high = (m >> index) << (index + 1);
  return low | high;
}

}  // namespace

std::string AxiomViolation::Describe() const {
  std::ostringstream os;
  switch (axiom) {
    case Axiom::kNormalized:
      os << "R1: rank of the empty set is not 0";
      break;
    case Axiom::kSubcardinality:
      os << "R1: rank exceeds cardinality (or is negative) at mask " << a;
      break;
    case Axiom::kMonotone:
      os << "R2: rank decreases from mask " << a << " to superset " << b;
      break;
    case Axiom::kSubmodular:
      os << "R3: submodularity fails for masks " << a << " and " << b;
      break;
  }
  return os.str();
}

std::optional<AxiomViolation> ValidateRankTable(std::span<const int> table,
                                                int n) {
  using Axiom = AxiomViolation::Axiom;
  const Mask count = Mask{1} << n;
  if (table.size() != count) {
    throw Error(ErrorCode::kInvalidInput, "rank table has the wrong size");
  }
  if (table[0] != 0) return AxiomViolation{Axiom::kNormalized, 0, 0};
  for (Mask a = 0; a < count; ++a) {
    if (table[a] < 0 || table[a] > Popcount(a)) {
      return AxiomViolation{Axiom::kSubcardinality, a, 0};
    }
  }
  for (Mask b = 0; b < count; ++b) {
    // Proper submasks of b, largest first.
    for (Mask a = (b - 1) & b; a != b; a = (a - 1) & b) {
      if (table[a] > table[b]) return AxiomViolation{Axiom::kMonotone, a, b};
      if (a == 0) break;
    }
  }
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      if (table[a] + table[b] < table[a | b] + table[a & b]) {
        return AxiomViolation{Axiom::kSubmodular, a, b};
      }
    }
  }
  return std::nullopt;
}

Matroid::Matroid(std::vector<std::string> ground, std::vector<int> table,
                 MatroidKind kind)
    : ground_(std::move(ground)), rank_(std::move(table)), kind_(kind) {
  if (auto violation = ValidateRankTable(rank_, size())) {
    throw Error(ErrorCode::kAxiomViolation,
                "not a matroid rank function: " + violation->Describe());
  }
}

Matroid Matroid::Free(std::vector<std::string> ground) {
  CheckGroundSize(ground);
  const int n = static_cast<int>(ground.size());
  std::vector<int> table(std::size_t{1} << n);
  for (Mask a = 0; a < table.size(); ++a) table[a] = Popcount(a);
  return Matroid(std::move(ground), std::move(table), MatroidKind::kFree);
}

Matroid Matroid::Uniform(std::vector<std::string> ground, int k) {
  CheckGroundSize(ground);
  const int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidInput,
                "uniform matroid rank " + std::to_string(k) +
                    " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<int> table(std::size_t{1} << n);
  for (Mask a = 0; a < table.size(); ++a) table[a] = std::min(k, Popcount(a));
  Matroid m(std::move(ground), std::move(table), MatroidKind::kUniform);
  m.uniform_k_ = k;
  return m;
}

Matroid Matroid::Partition(std::vector<std::string> ground,
                           std::vector<Mask> blocks, std::vector<int> caps) {
  CheckGroundSize(ground);
  const int n = static_cast<int>(ground.size());
  if (blocks.size() != caps.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "partition matroid needs one cap per block");
  }
  Mask covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0 || (blocks[i] & covered) != 0 ||
        !IsSubset(blocks[i], FullMask(n))) {
      throw Error(ErrorCode::kInvalidInput,
                  "partition blocks must be non-empty and disjoint");
    }
    if (caps[i] < 0) {
      throw Error(ErrorCode::kInvalidInput, "negative partition cap");
    }
    covered |= blocks[i];
  }
  if (covered != FullMask(n)) {
    throw Error(ErrorCode::kInvalidInput,
                "partition blocks must cover the ground set");
  }
  std::vector<int> table(std::size_t{1} << n);
  for (Mask a = 0; a < table.size(); ++a) {
    int r = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      r += std::min(caps[i], Popcount(a & blocks[i]));
    }
    table[a] = r;
  }
  Matroid m(std::move(ground), std::move(table), MatroidKind::kPartition);
  m.blocks_ = std::move(blocks);
  m.caps_ = std::move(caps);
  return m;
}

Matroid Matroid::FromBases(std::vector<std::string> ground,
                           std::span<const Mask> bases) {
  CheckGroundSize(ground);
  const int n = static_cast<int>(ground.size());
  if (bases.empty()) {
    throw Error(ErrorCode::kInvalidInput, "a matroid needs at least one basis");
  }
  for (Mask b : bases) {
    if (!IsSubset(b, FullMask(n))) {
      throw Error(ErrorCode::kInvalidInput, "basis outside the ground set");
    }
    if (Popcount(b) != Popcount(bases[0])) {
      throw Error(ErrorCode::kAxiomViolation, "bases differ in size");
    }
  }
  std::vector<int> table(std::size_t{1} << n, 0);
  for (Mask a = 0; a < table.size(); ++a) {
    for (Mask b : bases) table[a] = std::max(table[a], Popcount(a & b));
  }
  Matroid m(std::move(ground), std::move(table), MatroidKind::kExplicit);
  // The rank table can be valid while the list misses some bases; require
  // the list to be exactly the basis family.
  std::vector<Mask> given(bases.begin(), bases.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != m.Bases()) {
    throw Error(ErrorCode::kAxiomViolation,
                "basis list violates the basis exchange axiom");
  }
  return m;
}

Matroid Matroid::FromRankTable(std::vector<std::string> ground,
                               std::vector<int> table) {
  CheckGroundSize(ground);
  return Matroid(std::move(ground), std::move(table), MatroidKind::kExplicit);
}

int Matroid::Corank(Mask y) const {
  if (!IsSubset(y, full())) {
    throw Error(ErrorCode::kSubsetViolation,
                "co-rank argument outside the ground set");
  }
  return rank() - rank(full() & ~y);
}

std::vector<Mask> Matroid::Bases() const {
  std::vector<Mask> out;
  const int r = rank();
  for (Mask a = 0; a < rank_.size(); ++a) {
    if (Popcount(a) == r && rank_[a] == r) out.push_back(a);
  }
  return out;
}

Matroid Matroid::DeleteElement(int index) const {
  if (index < 0 || index >= size() || size() == 1) {
    throw Error(ErrorCode::kInvalidInput, "cannot delete matroid element");
  }
  std::vector<std::string> ground = ground_;
  ground.erase(ground.begin() + index);
  std::vector<int> table(std::size_t{1} << (size() - 1));
  for (Mask a = 0; a < table.size(); ++a) table[a] = rank_[SpreadIn(a, index)];
  return FromRankTable(std::move(ground), std::move(table));
}

}  // namespace termrank
