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

#include "termrank/bigraph.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "termrank/error.h"

namespace termrank {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid_input";
    case ErrorCode::kGroundMismatch:
      return "ground_mismatch";
    case ErrorCode::kSubsetViolation:
      return "subset_violation";
    case ErrorCode::kNotSimple:
      return "not_simple";
    case ErrorCode::kAxiomViolation:
      return "axiom_violation";
    case ErrorCode::kRankMismatch:
      return "rank_mismatch";
    case ErrorCode::kRankHypothesis:
      return "rank_hypothesis";
    case ErrorCode::kNotSupermodular:
      return "not_supermodular";
    case ErrorCode::kDegenerateInstance:
      return "degenerate_instance";
    case ErrorCode::kUnboundedDemand:
      return "unbounded_demand";
    case ErrorCode::kPrecondition:
      return "precondition";
    case ErrorCode::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

int MaxGroundSize() {
  const char* env = std::getenv("TERMRANK_MAX_GROUND");
  if (env == nullptr || *env == '\0') return kDefaultMaxGround;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 2 || value > kHardMaxGround) {
    throw Error(ErrorCode::kInvalidInput,
                "TERMRANK_MAX_GROUND must be an integer in [2, " +
                    std::to_string(kHardMaxGround) + "]");
  }
  return static_cast<int>(value);
}

std::vector<int> Elements(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool LexLess(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  int i = std::countr_zero(diff);
  Mask above = ~FullMask(i + 1);
  if (Contains(a, i)) {
    // a has i where b has something larger, or b has ended.
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

GroundSets::GroundSets(std::vector<std::string> s_ids,
                       std::vector<std::string> t_ids, int cap)
    : s_ids_(std::move(s_ids)), t_ids_(std::move(t_ids)) {
  if (s_ids_.empty() || t_ids_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "S and T must be non-empty");
  }
  if (cap > kHardMaxGround) cap = kHardMaxGround;
  if (v_size() > cap) {
    throw Error(ErrorCode::kInvalidInput,
                "|S| + |T| = " + std::to_string(v_size()) +
                    " exceeds the ground-set cap " + std::to_string(cap));
  }
  std::set<std::string> seen;
  for (const auto& id : s_ids_) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kInvalidInput, "duplicate node id '" + id + "'");
    }
  }
  for (const auto& id : t_ids_) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kInvalidInput,
                  "node id '" + id + "' is repeated or shared by S and T");
    }
  }
}

std::vector<std::string> GroundSets::v_ids() const {
  std::vector<std::string> v = s_ids_;
  v.insert(v.end(), t_ids_.begin(), t_ids_.end());
  return v;
}

std::optional<int> GroundSets::SIndex(const std::string& id) const {
  auto it = std::find(s_ids_.begin(), s_ids_.end(), id);
  if (it == s_ids_.end()) return std::nullopt;
  return static_cast<int>(it - s_ids_.begin());
}

std::optional<int> GroundSets::TIndex(const std::string& id) const {
  auto it = std::find(t_ids_.begin(), t_ids_.end(), id);
  if (it == t_ids_.end()) return std::nullopt;
  return static_cast<int>(it - t_ids_.begin());
}

void GroundSets::RequireSubsetOfS(Mask x) const {
  if (!IsSubset(x, full_s())) {
    throw Error(ErrorCode::kSubsetViolation, "set is not a subset of S");
  }
}

void GroundSets::RequireSubsetOfT(Mask y) const {
  if (!IsSubset(y, full_t())) {
    throw Error(ErrorCode::kSubsetViolation, "set is not a subset of T");
  }
}

Bigraph::Bigraph(GroundSets grounds)
    : grounds_(std::move(grounds)),
      mult_(grounds_.s_size() * grounds_.t_size(), 0),
      s_adj_(grounds_.s_size(), 0),
      t_adj_(grounds_.t_size(), 0),
      s_deg_(grounds_.s_size(), 0),
      t_deg_(grounds_.t_size(), 0) {}

Bigraph::Bigraph(GroundSets grounds, std::span<const Edge> edges)
    : Bigraph(std::move(grounds)) {
  for (const Edge& e : edges) AddEdge(e);
}

Bigraph Bigraph::Complete(GroundSets grounds) {
  Bigraph g(std::move(grounds));
  for (int s = 0; s < g.grounds().s_size(); ++s) {
    for (int t = 0; t < g.grounds().t_size(); ++t) g.AddEdge({s, t});
  }
  return g;
}

void Bigraph::AddEdge(Edge e) {
  if (e.s < 0 || e.s >= grounds_.s_size() || e.t < 0 ||
      e.t >= grounds_.t_size()) {
    throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
  }
  ++mult_[e.s * t_size() + e.t];
  s_adj_[e.s] |= Mask{1} << e.t;
  t_adj_[e.t] |= Mask{1} << e.s;
  ++s_deg_[e.s];
  ++t_deg_[e.t];
  ++edge_count_;
}

bool Bigraph::RemoveEdge(Edge e) {
  int& m = mult_[e.s * t_size() + e.t];
  if (m == 0) return false;
  --m;
  if (m == 0) {
    s_adj_[e.s] &= ~(Mask{1} << e.t);
    t_adj_[e.t] &= ~(Mask{1} << e.s);
  }
  --s_deg_[e.s];
  --t_deg_[e.t];
  --edge_count_;
  return true;
}

bool Bigraph::simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
}

std::vector<Edge> Bigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int s = 0; s < grounds_.s_size(); ++s) {
    for (int t = 0; t < t_size(); ++t) {
      for (int k = 0; k < multiplicity(s, t); ++k) out.push_back({s, t});
    }
  }
  return out;
}

namespace {

void CheckDegrees(const std::vector<int>& degrees, int expected_size,
                  const char* side) {
  if (static_cast<int>(degrees.size()) != expected_size) {
    throw Error(ErrorCode::kGroundMismatch,
                std::string("degree list for ") + side +
                    " does not match the ground set size");
  }
  for (int d : degrees) {
    if (d < 0) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string("negative degree on ") + side);
    }
  }
}

}  // namespace

DegreeSpec DegreeSpec::Full(const GroundSets& grounds,
                            std::vector<int> s_degrees,
                            std::vector<int> t_degrees) {
  CheckDegrees(s_degrees, grounds.s_size(), "S");
  CheckDegrees(t_degrees, grounds.t_size(), "T");
  int sum_s = std::accumulate(s_degrees.begin(), s_degrees.end(), 0);
  int sum_t = std::accumulate(t_degrees.begin(), t_degrees.end(), 0);
  if (sum_s != sum_t) {
    throw Error(ErrorCode::kInvalidInput,
                "degree totals differ: m_S(S) = " + std::to_string(sum_s) +
                    ", m_T(T) = " + std::to_string(sum_t));
  }
  DegreeSpec m;
  m.s_deg_ = std::move(s_degrees);
  m.t_deg_ = std::move(t_degrees);
  m.has_t_ = true;
  m.total_ = sum_s;
  return m;
}

DegreeSpec DegreeSpec::SOnly(const GroundSets& grounds,
                             std::vector<int> s_degrees) {
  CheckDegrees(s_degrees, grounds.s_size(), "S");
  DegreeSpec m;
  m.total_ = std::accumulate(s_degrees.begin(), s_degrees.end(), 0);
  m.s_deg_ = std::move(s_degrees);
  return m;
}

DegreeSpec DegreeSpec::Zero(const GroundSets& grounds) {
  return Full(grounds, std::vector<int>(grounds.s_size(), 0),
              std::vector<int>(grounds.t_size(), 0));
}

int DegreeSpec::SumS(Mask x) const {
  int sum = 0;
  for (int s : Elements(x)) sum += s_deg_[s];
  return sum;
}

int DegreeSpec::SumT(Mask y) const {
  int sum = 0;
  for (int t : Elements(y)) sum += t_deg_[t];
  return sum;
}

Bigraph BipartiteComplement(const Bigraph& h0) {
  if (!h0.simple()) {
    throw Error(ErrorCode::kNotSimple,
                "bipartite complement needs a simple graph");
  }
  const GroundSets& g = h0.grounds();
  Bigraph out(g);
  for (int s = 0; s < g.s_size(); ++s) {
    for (int t = 0; t < g.t_size(); ++t) {
      if (h0.multiplicity(s, t) == 0) out.AddEdge({s, t});
    }
  }
  return out;
}

Bigraph Union(const Bigraph& a, const Bigraph& b) {
  if (!(a.grounds() == b.grounds())) {
    throw Error(ErrorCode::kGroundMismatch, "union of graphs on different grounds");
  }
  Bigraph out = a;
  for (const Edge& e : b.edges()) out.AddEdge(e);
  return out;
}

Mask Neighborhood(const Bigraph& g, Mask y) {
  g.grounds().RequireSubsetOfT(y);
  Mask out = 0;
  for (int t : Elements(y)) out |= g.t_neighbors(t);
  return out;
}

int CutCount(const Bigraph& g, Mask x, Mask y) {
  g.grounds().RequireSubsetOfS(x);
  g.grounds().RequireSubsetOfT(y);
  int count = 0;
  for (int s : Elements(x)) {
    for (int t : Elements(y)) count += g.multiplicity(s, t);
  }
  return count;
}

namespace {

bool Augment(const Bigraph& g, int s, std::vector<int>& t_mate,
             std::vector<char>& visited) {
  for (int t : Elements(g.s_neighbors(s))) {
    if (visited[t]) continue;
    visited[t] = 1;
    if (t_mate[t] < 0 || Augment(g, t_mate[t], t_mate, visited)) {
      t_mate[t] = s;
      return true;
    }
  }
  return false;
}

}  // namespace

int MatchingNumber(const Bigraph& g) {
  const int ns = g.grounds().s_size();
  const int nt = g.grounds().t_size();
  std::vector<int> t_mate(nt, -1);
  int size = 0;
  for (int s = 0; s < ns; ++s) {
    std::vector<char> visited(nt, 0);
    if (Augment(g, s, t_mate, visited)) ++size;
  }
  return size;
}

bool Fits(const Bigraph& g, const DegreeSpec& m) {
  const GroundSets& gs = g.grounds();
  if (static_cast<int>(m.s_degrees().size()) != gs.s_size() ||
      (m.has_t() && static_cast<int>(m.t_degrees().size()) != gs.t_size())) {
    throw Error(ErrorCode::kGroundMismatch,
                "degree specification does not match the graph");
  }
  for (int s = 0; s < gs.s_size(); ++s) {
    if (g.s_degree(s) != m.s_degrees()[s]) return false;
  }
  if (m.has_t()) {
    for (int t = 0; t < gs.t_size(); ++t) {
      if (g.t_degree(t) != m.t_degrees()[t]) return false;
    }
  }
  return true;
}

}  // namespace termrank
