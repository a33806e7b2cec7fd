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

#ifndef TERMRANK_COVER_H_
#define TERMRANK_COVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "termrank/bigraph.h"
#include "termrank/error.h"
#include "termrank/feasibility.h"
#include "termrank/matroid.h"
#include "termrank/setfun.h"

namespace termrank {

// Raised by the constructive routes when the instance has no solution.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(ViolationCert cert)
      : Error(ErrorCode::kInfeasible, "instance is infeasible"),
        cert_(std::move(cert)) {}

  const ViolationCert& cert() const { return cert_; }

 private:
  ViolationCert cert_;
};

// An ST-independent family of V-subsets, each with positive demand.
struct DualFamily {
  std::vector<Mask> sets;
  long value = 0;
};

struct ArcCoverResult {
  // Minimum-cardinality multiset of ST-arcs (sorted) with in-degree at least
  // p(V') on every V'.
  std::vector<Edge> arcs;
  // Maximum-value ST-independent family.
  DualFamily dual;
  std::uint64_t cover_nodes = 0;
  std::uint64_t dual_nodes = 0;

  bool min_max_holds() const {
    return static_cast<long>(arcs.size()) == dual.value;
  }
};

// Exact supermodular arc covering on V = S + T at desk scale. Requires p
// positively ST-crossing supermodular (Error(kNotSupermodular)) and p <= 0
// on every set no ST-arc enters (Error(kUnboundedDemand)).
//
// The cover is found by iterative deepening branch and bound starting from
// a greedy dual value. The dual is then searched exhaustively, stopping as
// soon as it meets the cover size (weak duality makes that optimal).
ArcCoverResult MinArcCover(const SetFunction& p, const GroundSets& grounds);

// In-degree of every V' under the arc multiset is at least p(V').
bool CoversDemand(const GroundSets& grounds, std::span<const Edge> arcs,
                  const SetFunction& p);

// Drops arcs one at a time (last first) while the rest still covers p.
std::vector<Edge> MinimalizeCover(const GroundSets& grounds,
                                  std::vector<Edge> arcs, const SetFunction& p);

// r_S(Gamma_G(Y)) >= p_T(Y) for every Y subset of T.
bool MatroidCovers(const Bigraph& g, const Matroid& m_s,
                   const SetFunction& p_t);

// The sufficiency construction: p_0, p_1, a minimum cover of p_1, and its
// underlying graph. Throws InfeasibleError when CheckMsmt fails, and
// std::logic_error if the result misses a postcondition even after
// minimalizing the cover.
Bigraph ConstructViaCover(const Instance& inst);

// Depth-first search over subgraphs of the complement of h0 that fit the
// degrees (S-only specs constrain S alone), edges in lexicographic order with
// inclusion tried first. Returns the first one whose union with h0
// M_S-covers p_T.
std::optional<Bigraph> ConstructBrute(const Instance& inst);

// An ell-edge matching of gplus whose S-ends form a basis of m_s and whose
// T-ends form a basis of m_t (ell the common rank), or nullopt. The
// lexicographically first such edge list is returned.
std::optional<std::vector<Edge>> FindMatchingCoveringBases(
    const Bigraph& gplus, const Matroid& m_s, const Matroid& m_t);

enum class Route { kCover, kBrute, kBoth };

// Runs the selected constructor(s) for the degree-specified augmentation
// problem. kBoth requires the two to agree on feasibility. Throws
// InfeasibleError with the CheckMsmt certificate (CheckMsOnly for S-only
// specs, which only support kBrute).
Bigraph SolveAugmentation(const Instance& inst, Route route);

struct TermRankSolution {
  Bigraph graph;
  std::vector<Edge> matching;
};

// Degree-specified augmentation with a matching covering bases of M_S and
// M_T: checks CheckRyserGen, builds G for p_T := co-rank of M_T, then
// extracts the matching from G + h0.
std::variant<TermRankSolution, ViolationCert> SolveTermRank(const Instance& inst,
                                                            Route route);

}  // namespace termrank

#endif  // TERMRANK_COVER_H_
