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

#ifndef TERMRANK_BIGRAPH_H_
#define TERMRANK_BIGRAPH_H_

#include <compare>
#include <span>
#include <vector>

#include "termrank/ground.h"

namespace termrank {

// An edge st with s indexing S and t indexing T.
struct Edge {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Bipartite multigraph on fixed colour classes. Parallel edges are allowed;
// simple() reports whether there are any.
class Bigraph {
 public:
  explicit Bigraph(GroundSets grounds);
  Bigraph(GroundSets grounds, std::span<const Edge> edges);

  static Bigraph Complete(GroundSets grounds);

  const GroundSets& grounds() const { return grounds_; }

  void AddEdge(Edge e);
  // Removes one copy of e. Returns false when e is absent.
  bool RemoveEdge(Edge e);

  int multiplicity(int s, int t) const { return mult_[s * t_size() + t]; }
  bool simple() const;
  int edge_count() const { return edge_count_; }
  // Sorted; an edge of multiplicity k appears k times.
  std::vector<Edge> edges() const;

  // Neighbour masks ignore multiplicity.
  Mask s_neighbors(int s) const { return s_adj_[s]; }
  Mask t_neighbors(int t) const { return t_adj_[t]; }
  int s_degree(int s) const { return s_deg_[s]; }
  int t_degree(int t) const { return t_deg_[t]; }

  friend bool operator==(const Bigraph& a, const Bigraph& b) {
    return a.grounds_ == b.grounds_ && a.mult_ == b.mult_;
  }

 private:
  int t_size() const { return grounds_.t_size(); }

  GroundSets grounds_;
  std::vector<int> mult_;
  std::vector<Mask> s_adj_;
  std::vector<Mask> t_adj_;
  std::vector<int> s_deg_;
  std::vector<int> t_deg_;
  int edge_count_ = 0;
};

// Exact degree prescription m_S (and optionally m_T). The common total is
// always recomputed from the degrees.
class DegreeSpec {
 public:
  // Rejects negative entries and mismatched totals.
  static DegreeSpec Full(const GroundSets& grounds, std::vector<int> s_degrees,
                         std::vector<int> t_degrees);
  static DegreeSpec SOnly(const GroundSets& grounds,
                          std::vector<int> s_degrees);
  static DegreeSpec Zero(const GroundSets& grounds);

  bool has_t() const { return has_t_; }
  const std::vector<int>& s_degrees() const { return s_deg_; }
  // Empty when !has_t().
  const std::vector<int>& t_degrees() const { return t_deg_; }
  int total() const { return total_; }

  int SumS(Mask x) const;
  int SumT(Mask y) const;

  friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;

 private:
  DegreeSpec() = default;

  std::vector<int> s_deg_;
  std::vector<int> t_deg_;
  bool has_t_ = false;
  int total_ = 0;
};

// G_0: every pair of the complete bigraph that is not an edge of h0.
// Throws Error(kNotSimple) on a non-simple h0.
Bigraph BipartiteComplement(const Bigraph& h0);

// Edge multiset union of two graphs on the same ground sets.
Bigraph Union(const Bigraph& a, const Bigraph& b);

// Gamma_G(Y) for Y a subset of T; returns a subset of S.
Mask Neighborhood(const Bigraph& g, Mask y);

// d_G(X, Y): edges (with multiplicity) between X in S and Y in T.
int CutCount(const Bigraph& g, Mask x, Mask y);

// Maximum matching size via augmenting paths.
int MatchingNumber(const Bigraph& g);

// True iff every node degree equals the prescription. With an S-only spec
// only the S side is compared.
bool Fits(const Bigraph& g, const DegreeSpec& m);

}  // namespace termrank

#endif  // TERMRANK_BIGRAPH_H_
