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

#ifndef TERMRANK_FEASIBILITY_H_
#define TERMRANK_FEASIBILITY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "termrank/bigraph.h"
#include "termrank/ground.h"
#include "termrank/matroid.h"
#include "termrank/setfun.h"

namespace termrank {

// Identifies the inequality family a certificate violates.
enum class Condition {
  kOre,               // m_S(X) + m_T(Y) - d_G0(X,Y) <= gamma
  kOreComplete,       // same with d_G0(X,Y) = |X||Y|
  kMsmt,              // Ore plus a subpartition of T - Y
  kMsDegreeBound,     // m_S(s) + d_H0(s) <= |T|
  kMsOnly,            // m_S(X) plus a subpartition of T
  kFullySingle,       // Ore plus one set T0 of T - Y
  kCsakMatroid,       // H0 empty, T0 of T - Y
  kCsakMatroidMonotone,
  kRyser,             // + (l - |X| - |Y|)
  kBrualdiCover,      // l - r_S(X') - r_T(Y') <= 0 for covers X' + Y'
  kBrualdiNeighbor,   // r_S(Gamma(Y)) >= p_T(Y)
  kRyserGen,          // + l - r_S(X') - r_T(Y'), X' + Y' hitting H0
  kRyserMatroid,      // + l - r_S(X) - r_T(Y), H0 empty
  kRyserNovel,        // + l - |X'| - |Y'|
  kIntegrated,        // + (l - r_S(X) - r_T(Y))^+
  kEmptySetDemand,    // p_T(empty) > 0: nothing can cover it
};

std::string_view ConditionName(Condition c);
std::optional<Condition> ConditionFromName(std::string_view name);

// A violated inequality: lhs > rhs. x is a subset of S, y, parts, t0 and
// y_prime subsets of T (local masks).
struct ViolationCert {
  Condition which = Condition::kOre;
  Mask x = 0;
  Mask y = 0;
  // Non-empty, pairwise disjoint, disjoint from y.
  std::vector<Mask> parts;
  std::optional<Mask> t0;
  std::optional<Mask> x_prime;
  std::optional<Mask> y_prime;
  long lhs = 0;
  long rhs = 0;

  friend bool operator==(const ViolationCert&, const ViolationCert&) = default;
};

struct CheckResult {
  bool pass() const { return !cert.has_value(); }

  std::optional<ViolationCert> cert;
  // Largest lhs - rhs over the quantified family; positive iff violated.
  long max_excess = 0;
  // Number of left-hand sides evaluated.
  std::uint64_t evaluated = 0;
};

// Everything a degree-specified matroidal augmentation problem needs. The
// degree spec may be S-only (ms_only mode); matroid_t and target_rank are
// used by the term-rank conditions.
struct Instance {
  Bigraph h0;
  DegreeSpec degrees;
  Matroid matroid_s;
  SetFunction demand_t;
  std::optional<Matroid> matroid_t;
  std::optional<int> target_rank;

  const GroundSets& grounds() const { return h0.grounds(); }
};

// Ground-set consistency: h0 simple, degree lists, matroid and demand
// grounds. Throws Error.
void ValidateInstance(const Instance& inst);

// Calls `visit` with every subpartition of `universe` (including the empty
// one) in restricted-growth order. Blocks are listed by their smallest
// element.
void ForEachSubpartition(Mask universe,
                         const std::function<void(std::span<const Mask>)>& visit);

// Ore: g0 has a subgraph fitting m.
CheckResult CheckOre(const Bigraph& g0, const DegreeSpec& m);

// Main matroidal augmentation condition. Requires p_T positively
// intersecting supermodular (checked; Error(kNotSupermodular)).
CheckResult CheckMsmt(const Instance& inst);

// S-only variant: per-node bound, then m_S(X) + subpartitions of T.
CheckResult CheckMsOnly(const Instance& inst);

// Ore plus the single-set condition; requires p_T fully supermodular.
CheckResult CheckFully(const Instance& inst);

// H0 empty, p_T fully supermodular. With `monotone_form` only T0 = T - Y is
// tried, which needs p_T monotone.
CheckResult CheckCsakMatroid(const Instance& inst, bool monotone_form);

// Classic term rank: a simple graph fitting m with matching number >= ell.
// Throws Error(kPrecondition) when no simple graph fits m at all. Runs both
// the full enumeration and the sorted-prefix enumeration and requires them
// to agree.
CheckResult CheckRyser(const GroundSets& grounds, const DegreeSpec& m, int ell);
// The sorted-prefix ("largest values") enumeration alone.
CheckResult CheckRyserPrefix(const GroundSets& grounds, const DegreeSpec& m,
                             int ell);

// Matching of gplus covering bases of both matroids (ranks must be equal).
CheckResult CheckBrualdi(const Bigraph& gplus, const Matroid& m_s,
                         const Matroid& m_t);
CheckResult CheckBrualdiCoverForm(const Bigraph& gplus, const Matroid& m_s,
                                  const Matroid& m_t);
CheckResult CheckBrualdiNeighborForm(const Bigraph& gplus, const Matroid& m_s,
                                     const Matroid& m_t);

// Matroidal term rank augmentation (needs matroid_t and target_rank).
// Cross-checks against CheckFully with p_T := co-rank of M_T.
CheckResult CheckRyserGen(const Instance& inst);

// H0 empty: Ore.felt.0, then l - r_S(X) - r_T(Y) with X' = X, Y' = Y.
CheckResult CheckRyserMatroid(const GroundSets& grounds, const DegreeSpec& m,
                              const Matroid& m_s, const Matroid& m_t, int ell);
// Uniform matroids: Ore, then l - |X'| - |Y'| over covers of h0.
CheckResult CheckRyserNovel(const Bigraph& h0, const DegreeSpec& m, int ell);
// The single inequality with (l - r_S(X) - r_T(Y))^+; asserted equivalent
// to CheckRyserMatroid.
CheckResult CheckIntegrated(const GroundSets& grounds, const DegreeSpec& m,
                            const Matroid& m_s, const Matroid& m_t, int ell);

// Rank hypotheses r_S(S) = r_T(T) = ell. Throws Error(kRankHypothesis) when
// ell exceeds either rank, Error(kRankMismatch) otherwise.
void RequireRanks(const Matroid& m_s, const Matroid& m_t, int ell);

}  // namespace termrank

#endif  // TERMRANK_FEASIBILITY_H_
