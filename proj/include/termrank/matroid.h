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

#ifndef TERMRANK_MATROID_H_
#define TERMRANK_MATROID_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termrank/ground.h"

namespace termrank {

enum class MatroidKind { kFree, kUniform, kPartition, kExplicit };

// Which rank axiom a table breaks, with the witness sets.
struct AxiomViolation {
  enum class Axiom {
    kNormalized,      // rank(empty) != 0
    kSubcardinality,  // rank(A) < 0 or rank(A) > |A|
    kMonotone,        // A subset of B but rank(A) > rank(B)
    kSubmodular,      // rank(A) + rank(B) < rank(A|B) + rank(A&B)
  };
  Axiom axiom;
  Mask a = 0;
  Mask b = 0;

  std::string Describe() const;
};

// Returns the first violated axiom, scanning R1, then R2, then R3 with
// subsets in increasing mask order. The table must have 2^n entries.
std::optional<AxiomViolation> ValidateRankTable(std::span<const int> table,
                                                int n);

// A matroid materialized as its full rank table. All constructors validate
// the table and throw Error(kAxiomViolation) when it is not a rank function.
class Matroid {
 public:
  static Matroid Free(std::vector<std::string> ground);
  static Matroid Uniform(std::vector<std::string> ground, int k);
  // blocks partition the ground (element indices); rank(A) is the sum of
  // min(cap_i, |A & block_i|).
  static Matroid Partition(std::vector<std::string> ground,
                           std::vector<Mask> blocks, std::vector<int> caps);
  // rank(A) = max |A & B| over the bases.
  static Matroid FromBases(std::vector<std::string> ground,
                           std::span<const Mask> bases);
  static Matroid FromRankTable(std::vector<std::string> ground,
                               std::vector<int> table);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Mask full() const { return FullMask(size()); }
  MatroidKind kind() const { return kind_; }
  // Only meaningful for the kinds that carry them.
  int uniform_k() const { return uniform_k_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

  int rank(Mask a) const { return rank_[a]; }
  int rank() const { return rank_[full()]; }
  const std::vector<int>& rank_table() const { return rank_; }

  // rank(ground) - rank(ground - y). Throws on y outside the ground.
  int Corank(Mask y) const;

  // All maximal independent sets, in increasing mask order.
  std::vector<Mask> Bases() const;

  // Restriction to ground minus one element; indices above it shift down.
  // The result is an explicit matroid.
  Matroid DeleteElement(int index) const;

 private:
  Matroid(std::vector<std::string> ground, std::vector<int> table,
          MatroidKind kind);

  std::vector<std::string> ground_;
  std::vector<int> rank_;
  MatroidKind kind_;
  int uniform_k_ = 0;
  std::vector<Mask> blocks_;
  std::vector<int> caps_;
};

}  // namespace termrank

#endif  // TERMRANK_MATROID_H_
