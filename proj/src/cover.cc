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

#include "termrank/cover.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace termrank {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits MakeBits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void SetBit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void ClearBit(Bits& b, std::size_t i) {
  b[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}
bool Intersects(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) != 0) return true;
  }
  return false;
}
int FirstBit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(b[w]));
  }
  return -1;
}
void AndInPlace(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
}

constexpr std::size_t kMemoLimit = 1 << 21;

// Search state shared by the cover and dual searches. Positive-demand sets
// are indexed by decreasing demand, ties by increasing mask.
class ArcCoverSearch {
 public:
  ArcCoverSearch(const SetFunction& p, const GroundSets& grounds) {
    const Mask s_part = grounds.s_in_v();
    const Mask t_part = grounds.t_in_v();
    for (Mask v = 0; v <= grounds.full_v(); ++v) {
      if (p(v) <= 0) continue;
      if ((v & t_part) == 0 || (s_part & ~v) == 0) {
        throw Error(ErrorCode::kUnboundedDemand,
                    "positive demand on a set no ST-arc enters (mask " +
                        std::to_string(v) + ")");
      }
      sets_.push_back(v);
    }
    std::stable_sort(sets_.begin(), sets_.end(),
                     [&](Mask a, Mask b) { return p(a) > p(b); });
    for (Mask v : sets_) demand_.push_back(p(v));

    const int ns = grounds.s_size();
    const int nt = grounds.t_size();
    if (ns * nt > 64) {
      throw Error(ErrorCode::kInvalidInput,
                  "too many ST-arcs for the exact cover search");
    }
    const std::size_t n = sets_.size();
    for (int s = 0; s < ns; ++s) {
      for (int t = 0; t < nt; ++t) {
        const Mask tail = Mask{1} << s;
        const Mask head = Mask{1} << (ns + t);
        std::vector<int> entered;
        Bits bits = MakeBits(n);
        for (std::size_t i = 0; i < n; ++i) {
          if ((sets_[i] & tail) == 0 && (sets_[i] & head) != 0) {
            entered.push_back(static_cast<int>(i));
            SetBit(bits, i);
          }
        }
        arc_edges_.push_back({s, t});
        enters_.push_back(std::move(entered));
        enters_bits_.push_back(std::move(bits));
      }
    }
    entering_.assign(n, {});
    for (std::size_t a = 0; a < arc_edges_.size(); ++a) {
      for (int i : enters_[a]) entering_[i].push_back(static_cast<int>(a));
    }
    independent_.assign(n, MakeBits(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && StIndependentPair(sets_[i], sets_[j], s_part, t_part)) {
          SetBit(independent_[i], j);
        }
      }
    }
  }

  const std::vector<int>& demands() const { return demand_; }

  // Greedy ST-independent family over sets with positive weight, heaviest
  // first.
  long GreedyFamily(const std::vector<int>& weight,
                    std::vector<int>* chosen) const {
    std::vector<int> order;
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (weight[i] > 0) order.push_back(static_cast<int>(i));
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] > weight[b]; });
    long value = 0;
    Bits compatible = MakeBits(sets_.size());
    for (int i : order) SetBit(compatible, i);
    for (int i : order) {
      if (!((compatible[i / 64] >> (i % 64)) & 1)) continue;
      value += weight[i];
      if (chosen) chosen->push_back(i);
      AndInPlace(compatible, independent_[i]);
    }
    return value;
  }

  // Minimum cover; returns arc multiplicities.
  std::vector<int> MinCover(long lower_bound) {
    long upper = std::accumulate(demand_.begin(), demand_.end(), 0L);
    for (long k = std::max(0L, lower_bound); k <= upper; ++k) {
      counts_.assign(arc_edges_.size(), 0);
      deficiency_ = demand_;
      memo_.clear();
      if (CoverDfs(static_cast<int>(k), 0)) return counts_;
    }
    throw std::logic_error("no arc cover within the trivial upper bound");
  }

  // Maximum ST-independent family, stopping at `target`.
  DualFamily MaxDual(const std::vector<int>& cover_counts, long target) {
    cover_counts_ = cover_counts;
    std::vector<int> greedy;
    best_dual_value_ = GreedyFamily(demand_, &greedy);
    best_dual_ = greedy;
    dual_target_ = target;
    if (best_dual_value_ < target) {
      Bits compatible = MakeBits(sets_.size());
      for (std::size_t i = 0; i < sets_.size(); ++i) SetBit(compatible, i);
      std::vector<int> chosen;
      DualDfs(compatible, 0, chosen);
    }
    DualFamily family;
    for (int i : best_dual_) family.sets.push_back(sets_[i]);
    std::sort(family.sets.begin(), family.sets.end());
    family.value = best_dual_value_;
    return family;
  }

  const std::vector<Edge>& arc_edges() const { return arc_edges_; }
  std::uint64_t cover_nodes() const { return cover_nodes_; }
  std::uint64_t dual_nodes() const { return dual_nodes_; }

 private:
  void Apply(int arc, int delta) {
    counts_[arc] += delta;
    for (int i : enters_[arc]) deficiency_[i] -= delta;
  }

  std::string MemoKey(std::uint64_t forbidden) const {
    std::string key(counts_.size() + sizeof(forbidden), '\0');
    for (std::size_t a = 0; a < counts_.size(); ++a) {
      key[a] = static_cast<char>(counts_[a]);
    }
    std::memcpy(key.data() + counts_.size(), &forbidden, sizeof(forbidden));
    return key;
  }

  bool CoverDfs(int remaining, std::uint64_t forbidden) {
    ++cover_nodes_;
    std::vector<int> positive(deficiency_.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < deficiency_.size(); ++i) {
      if (deficiency_[i] > 0) {
        positive[i] = deficiency_[i];
        any = true;
      }
    }
    if (!any) return true;
    if (remaining == 0) return false;
    // Each arc enters at most one member of an ST-independent family.
    if (GreedyFamily(positive, nullptr) > remaining) return false;

    std::string key = MemoKey(forbidden);
    if (memo_.count(key)) return false;

    // Fail-first: the deficient set with the fewest usable entering arcs.
    int branch_set = -1;
    int fewest = 0;
    for (std::size_t i = 0; i < deficiency_.size(); ++i) {
      if (deficiency_[i] <= 0) continue;
      int usable = 0;
      for (int a : entering_[i]) {
        if (!((forbidden >> a) & 1)) ++usable;
      }
      if (branch_set < 0 || usable < fewest ||
          (usable == fewest && deficiency_[i] > deficiency_[branch_set])) {
        branch_set = static_cast<int>(i);
        fewest = usable;
      }
    }
    std::vector<std::pair<int, int>> options;  // (-gain, arc)
    for (int a : entering_[branch_set]) {
      if ((forbidden >> a) & 1) continue;
      int gain = 0;
      for (int i : enters_[a]) {
        if (deficiency_[i] > 0) ++gain;
      }
      options.push_back({-gain, a});
    }
    std::sort(options.begin(), options.end());

    std::uint64_t tried = 0;
    for (const auto& [neg_gain, arc] : options) {
      Apply(arc, +1);
      if (CoverDfs(remaining - 1, forbidden | tried)) return true;
      Apply(arc, -1);
      tried |= std::uint64_t{1} << arc;
    }
    if (memo_.size() < kMemoLimit) memo_.insert(std::move(key));
    return false;
  }

  void DualDfs(Bits compatible, long value, std::vector<int>& chosen) {
    ++dual_nodes_;
    if (best_dual_value_ >= dual_target_) return;
    long by_weight = value;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if ((compatible[i / 64] >> (i % 64)) & 1) by_weight += demand_[i];
    }
    long by_arcs = value;
    for (std::size_t a = 0; a < cover_counts_.size(); ++a) {
      if (cover_counts_[a] > 0 && Intersects(enters_bits_[a], compatible)) {
        by_arcs += cover_counts_[a];
      }
    }
    if (std::min(by_weight, by_arcs) <= best_dual_value_) return;
    const int j = FirstBit(compatible);
    if (j < 0) return;

    Bits with = compatible;
    AndInPlace(with, independent_[j]);
    chosen.push_back(j);
    if (value + demand_[j] > best_dual_value_) {
      best_dual_value_ = value + demand_[j];
      best_dual_ = chosen;
    }
    DualDfs(std::move(with), value + demand_[j], chosen);
    chosen.pop_back();

    ClearBit(compatible, j);
    DualDfs(std::move(compatible), value, chosen);
  }

  std::vector<Mask> sets_;
  std::vector<int> demand_;
  std::vector<Edge> arc_edges_;
  std::vector<std::vector<int>> enters_;
  std::vector<Bits> enters_bits_;
  std::vector<std::vector<int>> entering_;
  std::vector<Bits> independent_;

  std::vector<int> counts_;
  std::vector<int> deficiency_;
  std::unordered_set<std::string> memo_;
  std::uint64_t cover_nodes_ = 0;

  std::vector<int> cover_counts_;
  std::vector<int> best_dual_;
  long best_dual_value_ = 0;
  long dual_target_ = 0;
  std::uint64_t dual_nodes_ = 0;
};

bool CoversWithAdjacency(const std::vector<Mask>& t_adj, const Matroid& m_s,
                         const SetFunction& p_t) {
  std::vector<Mask> gamma(std::size_t{1} << t_adj.size(), 0);
  for (Mask y = 0; y < gamma.size(); ++y) {
    if (y != 0) gamma[y] = gamma[y & (y - 1)] | t_adj[std::countr_zero(y)];
    if (m_s.rank(gamma[y]) < p_t(y)) return false;
  }
  return true;
}

bool AugmentationPostconditions(const Bigraph& g, const Instance& inst) {
  if (!Fits(g, inst.degrees)) return false;
  const Bigraph plus = Union(g, inst.h0);
  return plus.simple() && MatroidCovers(plus, inst.matroid_s, inst.demand_t);
}

}  // namespace

ArcCoverResult MinArcCover(const SetFunction& p, const GroundSets& grounds) {
  if (auto v = ClassifyOnV(p, grounds, SupermodularMode::kSTCrossing,
                           /*positively=*/true)) {
    throw Error(ErrorCode::kNotSupermodular,
                "demand is not positively ST-crossing supermodular (masks " +
                    std::to_string(v->x) + ", " + std::to_string(v->y) + ")");
  }
  ArcCoverSearch search(p, grounds);
  ArcCoverResult result;
  const long lower = search.GreedyFamily(search.demands(), nullptr);
  const std::vector<int> counts = search.MinCover(lower);
  long size = 0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (int k = 0; k < counts[a]; ++k) result.arcs.push_back(search.arc_edges()[a]);
    size += counts[a];
  }
  result.dual = search.MaxDual(counts, size);
  result.cover_nodes = search.cover_nodes();
  result.dual_nodes = search.dual_nodes();
  return result;
}

bool CoversDemand(const GroundSets& grounds, std::span<const Edge> arcs,
                  const SetFunction& p) {
  for (Mask v = 0; v <= grounds.full_v(); ++v) {
    if (p(v) <= 0) continue;
    const Mask x = grounds.SPart(v);
    const Mask y = grounds.TPart(v);
    int in_degree = 0;
    for (const Edge& e : arcs) {
      if (!Contains(x, e.s) && Contains(y, e.t)) ++in_degree;
    }
    if (in_degree < p(v)) return false;
  }
  return true;
}

std::vector<Edge> MinimalizeCover(const GroundSets& grounds,
                                  std::vector<Edge> arcs,
                                  const SetFunction& p) {
  for (std::size_t i = arcs.size(); i-- > 0;) {
    std::vector<Edge> trial = arcs;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (CoversDemand(grounds, trial, p)) arcs = std::move(trial);
  }
  return arcs;
}

bool MatroidCovers(const Bigraph& g, const Matroid& m_s,
                   const SetFunction& p_t) {
  std::vector<Mask> t_adj(g.grounds().t_size());
  for (int t = 0; t < g.grounds().t_size(); ++t) t_adj[t] = g.t_neighbors(t);
  return CoversWithAdjacency(t_adj, m_s, p_t);
}

Bigraph ConstructViaCover(const Instance& inst) {
  CheckResult check = CheckMsmt(inst);
  if (!check.pass()) throw InfeasibleError(*check.cert);

  const GroundSets& g = inst.grounds();
  const SetFunction p0 = BuildP0(inst.h0, inst.degrees, inst.demand_t,
                                 inst.matroid_s);
  const SetFunction p1 = BuildP1(p0, inst.h0, inst.degrees);
  ArcCoverResult cover = MinArcCover(p1, g);
  if (!cover.min_max_holds() ||
      static_cast<long>(cover.arcs.size()) != inst.degrees.total()) {
    throw std::logic_error("minimum cover of p_1 does not have gamma arcs");
  }
  Bigraph result(g, cover.arcs);
  if (!AugmentationPostconditions(result, inst)) {
    result = Bigraph(g, MinimalizeCover(g, cover.arcs, p1));
    if (!AugmentationPostconditions(result, inst)) {
      throw std::logic_error("cover route produced an invalid graph");
    }
  }
  return result;
}

std::optional<Bigraph> ConstructBrute(const Instance& inst) {
  ValidateInstance(inst);
  const GroundSets& g = inst.grounds();
  const DegreeSpec& m = inst.degrees;
  const bool has_t = m.has_t();
  std::vector<Edge> candidates = BipartiteComplement(inst.h0).edges();

  std::vector<int> res_s = m.s_degrees();
  std::vector<int> res_t = has_t ? m.t_degrees() : std::vector<int>(g.t_size(), 0);
  std::vector<int> avail_s(g.s_size(), 0);
  std::vector<int> avail_t(g.t_size(), 0);
  for (const Edge& e : candidates) {
    ++avail_s[e.s];
    ++avail_t[e.t];
  }
  for (int s = 0; s < g.s_size(); ++s) {
    if (res_s[s] > avail_s[s]) return std::nullopt;
  }
  if (has_t) {
    for (int t = 0; t < g.t_size(); ++t) {
      if (res_t[t] > avail_t[t]) return std::nullopt;
    }
  }

  std::vector<Mask> t_adj(g.t_size());
  for (int t = 0; t < g.t_size(); ++t) t_adj[t] = inst.h0.t_neighbors(t);
  std::vector<Edge> chosen;

  auto dfs = [&](auto&& self, std::size_t e) -> bool {
    if (e == candidates.size()) {
      return CoversWithAdjacency(t_adj, inst.matroid_s, inst.demand_t);
    }
    const Edge edge = candidates[e];
    --avail_s[edge.s];
    --avail_t[edge.t];
    bool found = false;
    if (res_s[edge.s] > 0 && (!has_t || res_t[edge.t] > 0)) {
      --res_s[edge.s];
      if (has_t) --res_t[edge.t];
      if (res_s[edge.s] <= avail_s[edge.s] &&
          (!has_t || res_t[edge.t] <= avail_t[edge.t])) {
        const Mask before = t_adj[edge.t];
        t_adj[edge.t] |= Mask{1} << edge.s;
        chosen.push_back(edge);
        found = self(self, e + 1);
        if (!found) {
          chosen.pop_back();
          t_adj[edge.t] = before;
        }
      }
      ++res_s[edge.s];
      if (has_t) ++res_t[edge.t];
    }
    if (!found && res_s[edge.s] <= avail_s[edge.s] &&
        (!has_t || res_t[edge.t] <= avail_t[edge.t])) {
      found = self(self, e + 1);
    }
    ++avail_s[edge.s];
    ++avail_t[edge.t];
    return found;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return Bigraph(g, chosen);
}

std::optional<std::vector<Edge>> FindMatchingCoveringBases(
    const Bigraph& gplus, const Matroid& m_s, const Matroid& m_t) {
  const GroundSets& g = gplus.grounds();
  if (m_s.ground() != g.s_ids() || m_t.ground() != g.t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "matroids are not on S and T");
  }
  if (m_s.rank() != m_t.rank()) {
    throw Error(ErrorCode::kRankMismatch, "r_S(S) != r_T(T)");
  }
  const int ell = m_s.rank();
  std::vector<Edge> edges;
  for (int s = 0; s < g.s_size(); ++s) {
    for (int t = 0; t < g.t_size(); ++t) {
      if (gplus.multiplicity(s, t) > 0) edges.push_back({s, t});
    }
  }
  // Ends still reachable from edge e onwards.
  std::vector<Mask> suffix_s(edges.size() + 1, 0);
  std::vector<Mask> suffix_t(edges.size() + 1, 0);
  for (std::size_t e = edges.size(); e-- > 0;) {
    suffix_s[e] = suffix_s[e + 1] | (Mask{1} << edges[e].s);
    suffix_t[e] = suffix_t[e + 1] | (Mask{1} << edges[e].t);
  }
  std::vector<Edge> chosen;
  auto dfs = [&](auto&& self, std::size_t start, Mask used_s,
                 Mask used_t) -> bool {
    const int size = static_cast<int>(chosen.size());
    if (size == ell) return true;
    for (std::size_t e = start; e < edges.size(); ++e) {
      const int remaining = ell - size;
      if (static_cast<int>(edges.size() - e) < remaining) return false;
      if (m_s.rank(used_s | (suffix_s[e] & ~used_s)) < ell ||
          m_t.rank(used_t | (suffix_t[e] & ~used_t)) < ell) {
        return false;
      }
      const Edge edge = edges[e];
      const Mask s_bit = Mask{1} << edge.s;
      const Mask t_bit = Mask{1} << edge.t;
      if ((used_s & s_bit) || (used_t & t_bit)) continue;
      if (m_s.rank(used_s | s_bit) != size + 1 ||
          m_t.rank(used_t | t_bit) != size + 1) {
        continue;
      }
      chosen.push_back(edge);
      if (self(self, e + 1, used_s | s_bit, used_t | t_bit)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0, 0, 0)) return std::nullopt;
  return chosen;
}

Bigraph SolveAugmentation(const Instance& inst, Route route) {
  if (!inst.degrees.has_t()) {
    if (route != Route::kBrute) {
      throw Error(ErrorCode::kInvalidInput,
                  "S-only degree specifications support the brute route only");
    }
    CheckResult check = CheckMsOnly(inst);
    std::optional<Bigraph> g = ConstructBrute(inst);
    if (g.has_value() != check.pass()) {
      throw std::logic_error("S-only condition disagrees with brute force");
    }
    if (!g) throw InfeasibleError(*check.cert);
    return *g;
  }
  CheckResult check = CheckMsmt(inst);
  std::optional<Bigraph> via_cover;
  std::optional<Bigraph> via_brute;
  if (route != Route::kBrute && check.pass()) via_cover = ConstructViaCover(inst);
  if (route != Route::kCover) {
    via_brute = ConstructBrute(inst);
    if (via_brute.has_value() != check.pass()) {
      throw std::logic_error("augmentation condition disagrees with brute force");
    }
  }
  if (!check.pass()) throw InfeasibleError(*check.cert);
  return via_cover ? *via_cover : *via_brute;
}

std::variant<TermRankSolution, ViolationCert> SolveTermRank(const Instance& inst,
                                                            Route route) {
  CheckResult check = CheckRyserGen(inst);
  if (!check.pass()) return *check.cert;
  Instance reduced = inst;
  reduced.demand_t = SetFunction::Corank(*inst.matroid_t);
  Bigraph g(inst.grounds());
  try {
    g = SolveAugmentation(reduced, route);
  } catch (const InfeasibleError&) {
    throw std::logic_error(
        "term rank condition passed but the co-rank instance is infeasible");
  }
  std::optional<std::vector<Edge>> matching = FindMatchingCoveringBases(
      Union(g, inst.h0), inst.matroid_s, *inst.matroid_t);
  if (!matching) {
    throw std::logic_error("augmented graph has no basis-covering matching");
  }
  return TermRankSolution{std::move(g), std::move(*matching)};
}

}  // namespace termrank
