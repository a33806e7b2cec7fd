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

// Slow reference implementations used only as test oracles. Each one works
// straight from the definition and shares no code path with the library
// routine it checks beyond rank-table lookups.

#ifndef TERMRANK_TESTS_ORACLES_H_
#define TERMRANK_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "termrank/bigraph.h"
#include "termrank/feasibility.h"
#include "termrank/matroid.h"
#include "termrank/setfun.h"

namespace termrank::oracle {

inline std::vector<Mask> Submasks(Mask m) {
  std::vector<Mask> out;
  for (Mask a = 0; a <= m; ++a) {
    if ((a & ~m) == 0) out.push_back(a);
  }
  return out;
}

// Largest total weight of a subpartition of `universe`; the empty
// subpartition contributes 0.
inline long SubpartitionMax(Mask universe,
                            const std::function<long(Mask)>& weight) {
  if (universe == 0) return 0;
  const Mask low = universe & (~universe + 1);
  const Mask rest = universe & ~low;
  long best = SubpartitionMax(rest, weight);
  for (Mask sub : Submasks(rest)) {
    const Mask block = low | sub;
    best = std::max(best, weight(block) + SubpartitionMax(rest & ~block, weight));
  }
  return best;
}

inline long CountSubpartitions(int n) {
  // Subpartitions of an n-set are partitions of an (n+1)-set: Bell(n+1).
  std::vector<std::vector<long>> tri{{1}};
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<long> row{tri.back().back()};
    for (long v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(row);
  }
  return tri[n + 1].front();
}

inline std::vector<Mask> BasesByRank(const Matroid& m) {
  std::vector<Mask> bases;
  const int r = m.rank(m.full());
  for (Mask a = 0; a <= m.full(); ++a) {
    if (Popcount(a) == r && m.rank(a) == r) bases.push_back(a);
  }
  return bases;
}

// min over bases B of |Y & B|.
inline int CorankByBases(const Matroid& m, Mask y) {
  int best = std::numeric_limits<int>::max();
  for (Mask b : BasesByRank(m)) best = std::min(best, Popcount(y & b));
  return best;
}

inline bool IsMatching(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].s == edges[j].s || edges[i].t == edges[j].t) return false;
    }
  }
  return true;
}

inline int MatchingNumber(const std::vector<Edge>& edges) {
  int best = 0;
  const int n = static_cast<int>(edges.size());
  for (Mask pick = 0; pick < (Mask{1} << n); ++pick) {
    std::vector<Edge> chosen;
    for (int i : Elements(pick)) chosen.push_back(edges[i]);
    if (IsMatching(chosen)) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

inline int HDegreeAtT(const Bigraph& h0, int t) {
  int d = 0;
  for (const Edge& e : h0.edges()) d += e.t == t;
  return d;
}

inline bool InClosedFamily(const Bigraph& h0, Mask v) {
  const GroundSets& g = h0.grounds();
  for (const Edge& e : h0.edges()) {
    const bool s_in = (v >> e.s) & 1u;
    const bool t_in = (v >> (g.s_size() + e.t)) & 1u;
    if (!s_in && t_in) return false;
  }
  return true;
}

// The p0 formula evaluated directly for one V-mask.
inline int P0At(const Bigraph& h0, const DegreeSpec& m, const SetFunction& p_t,
                const Matroid& r_s, Mask v) {
  const GroundSets& g = h0.grounds();
  const Mask x = g.SPart(v);
  const Mask y = g.TPart(v);
  if (y == 0 || !InClosedFamily(h0, v)) return 0;
  const int base = p_t(y) - r_s.rank(x);
  if (Popcount(y) >= 2) return base;
  const int t = Elements(y)[0];
  return std::max(base, m.t_degrees()[t] - Popcount(x) + HDegreeAtT(h0, t));
}

inline int P0SOnlyAt(const Bigraph& h0, const SetFunction& p_t,
                     const Matroid& r_s, Mask v) {
  const GroundSets& g = h0.grounds();
  if (!InClosedFamily(h0, v)) return 0;
  return p_t(g.TPart(v)) - r_s.rank(g.SPart(v));
}

// Every subset of the G0 edges, checked for fit and M_S-covering.
inline bool AugmentationExists(const Instance& inst) {
  const GroundSets& g = inst.grounds();
  const std::vector<Edge> g0 = BipartiteComplement(inst.h0).edges();
  const int n = static_cast<int>(g0.size());
  for (Mask pick = 0; pick < (Mask{1} << n); ++pick) {
    std::vector<int> ds(g.s_size(), 0);
    std::vector<int> dt(g.t_size(), 0);
    for (int i : Elements(pick)) {
      ++ds[g0[i].s];
      ++dt[g0[i].t];
    }
    if (ds != inst.degrees.s_degrees()) continue;
    if (inst.degrees.has_t() && dt != inst.degrees.t_degrees()) continue;
    std::vector<Mask> adj(g.t_size(), 0);
    for (const Edge& e : inst.h0.edges()) adj[e.t] |= Mask{1} << e.s;
    for (int i : Elements(pick)) adj[g0[i].t] |= Mask{1} << g0[i].s;
    bool covers = true;
    for (Mask y = 0; y <= g.full_t() && covers; ++y) {
      Mask gamma = 0;
      for (int t : Elements(y)) gamma |= adj[t];
      covers = inst.matroid_s.rank(gamma) >= inst.demand_t(y);
    }
    if (covers) return true;
  }
  return false;
}

// Smallest number of ST-arcs (with repetition) covering p, by trying every
// arc-count vector with entries up to `max_mult`.
inline long MinCoverBrute(const SetFunction& p, const GroundSets& g,
                          int max_mult) {
  const int arcs = g.s_size() * g.t_size();
  std::vector<int> count(arcs, 0);
  long best = std::numeric_limits<long>::max();
  while (true) {
    long size = 0;
    for (int c : count) size += c;
    if (size < best) {
      bool ok = true;
      for (Mask v = 0; v <= g.full_v() && ok; ++v) {
        int in = 0;
        for (int a = 0; a < arcs; ++a) {
          const int s = a / g.t_size();
          const int t = a % g.t_size();
          if (!((v >> s) & 1u) && ((v >> (g.s_size() + t)) & 1u)) in += count[a];
        }
        ok = in >= p(v);
      }
      if (ok) best = size;
    }
    int i = 0;
    while (i < arcs && count[i] == max_mult) count[i++] = 0;
    if (i == arcs) break;
    ++count[i];
  }
  return best;
}

// Some l-matching of gplus whose ends form bases of both matroids.
inline bool MatchingCoveringBasesExists(const Bigraph& gplus, const Matroid& m_s,
                                        const Matroid& m_t) {
  const std::vector<Edge> edges = gplus.edges();
  const int ell = m_s.rank(m_s.full());
  const int n = static_cast<int>(edges.size());
  for (Mask pick = 0; pick < (Mask{1} << n); ++pick) {
    if (Popcount(pick) != ell) continue;
    std::vector<Edge> chosen;
    Mask xs = 0, ys = 0;
    for (int i : Elements(pick)) {
      chosen.push_back(edges[i]);
      xs |= Mask{1} << edges[i].s;
      ys |= Mask{1} << edges[i].t;
    }
    if (!IsMatching(chosen)) continue;
    if (m_s.rank(xs) == ell && m_t.rank(ys) == ell &&
        m_t.rank(m_t.full()) == ell) {
      return true;
    }
  }
  return false;
}

}  // namespace termrank::oracle

#endif  // TERMRANK_TESTS_ORACLES_H_
