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

#include "termrank/feasibility.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "termrank/error.h"

namespace termrank {

namespace {

constexpr std::array<std::pair<Condition, std::string_view>, 16> kConditionNames =
    {{
        {Condition::kOre, "ore"},
        {Condition::kOreComplete, "ore_complete"},
        {Condition::kMsmt, "msmt"},
        {Condition::kMsDegreeBound, "ms_degree_bound"},
        {Condition::kMsOnly, "ms_only"},
        {Condition::kFullySingle, "fully_single"},
        {Condition::kCsakMatroid, "csak_matroid"},
        {Condition::kCsakMatroidMonotone, "csak_matroid_monotone"},
        {Condition::kRyser, "ryser"},
        {Condition::kBrualdiCover, "brualdi_cover"},
        {Condition::kBrualdiNeighbor, "brualdi_neighbor"},
        {Condition::kRyserGen, "ryser_gen"},
        {Condition::kRyserMatroid, "ryser_matroid"},
        {Condition::kRyserNovel, "ryser_novel"},
        {Condition::kIntegrated, "integrated"},
        {Condition::kEmptySetDemand, "empty_set_demand"},
    }};

// Running maximum of lhs - rhs with the lexicographic tie-break on
// (primary, secondary).
class Best {
 public:
  void Offer(long excess, Mask primary, Mask secondary = 0) {
    if (!have_ || excess > excess_ ||
        (excess == excess_ &&
         (LexLess(primary, primary_) ||
          (primary == primary_ && LexLess(secondary, secondary_))))) {
      have_ = true;
      excess_ = excess;
      primary_ = primary;
      secondary_ = secondary;
    }
    ++evaluated_;
  }

  long excess() const { return excess_; }
  Mask primary() const { return primary_; }
  Mask secondary() const { return secondary_; }
  std::uint64_t evaluated() const { return evaluated_; }

 private:
  bool have_ = false;
  long excess_ = 0;
  Mask primary_ = 0;
  Mask secondary_ = 0;
  std::uint64_t evaluated_ = 0;
};

std::vector<int> SubsetSums(const std::vector<int>& weights) {
  std::vector<int> out(std::size_t{1} << weights.size(), 0);
  for (Mask a = 1; a < out.size(); ++a) {
    out[a] = out[a & (a - 1)] + weights[std::countr_zero(a)];
  }
  return out;
}

// d_H(X, Y) for a simple H.
int SimpleCut(const Bigraph& h, Mask x, Mask y) {
  int count = 0;
  for (Mask rest = y; rest != 0; rest &= rest - 1) {
    count += Popcount(h.t_neighbors(std::countr_zero(rest)) & x);
  }
  return count;
}

// Gamma_H(P) for every P subset of T.
std::vector<Mask> NeighborTable(const Bigraph& h) {
  const int nt = h.grounds().t_size();
  std::vector<Mask> out(std::size_t{1} << nt, 0);
  for (Mask p = 1; p < out.size(); ++p) {
    out[p] = out[p & (p - 1)] | h.t_neighbors(std::countr_zero(p));
  }
  return out;
}

// best[U] = max total weight of a subpartition of U, using parts of positive
// weight only (the empty subpartition gives 0).
std::vector<long> BestSubpartitionValues(const std::vector<long>& weight) {
  std::vector<long> best(weight.size(), 0);
  for (Mask u = 1; u < best.size(); ++u) {
    const Mask low = u & (~u + 1);
    long value = best[u ^ low];
    const Mask rest = u ^ low;
    // Parts P = low + (submask of rest).
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (weight[part] > 0) value = std::max(value, weight[part] + best[u ^ part]);
      if (sub == 0) break;
    }
    best[u] = value;
  }
  return best;
}

bool PartsLess(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      LexLess);
}

// Lexicographically first subpartition of `universe` into positive-weight
// parts whose total weight is `target`.
std::vector<Mask> LexFirstOptimalSubpartition(Mask universe,
                                              const std::vector<long>& weight,
                                              long target) {
  std::optional<std::vector<Mask>> chosen;
  ForEachSubpartition(universe, [&](std::span<const Mask> parts) {
    long total = 0;
    for (Mask part : parts) {
      if (weight[part] <= 0) return;
      total += weight[part];
    }
    if (total != target) return;
    std::vector<Mask> candidate(parts.begin(), parts.end());
    if (!chosen || PartsLess(candidate, *chosen)) chosen = std::move(candidate);
  });
  if (!chosen) throw std::logic_error("subpartition reconstruction failed");
  return *chosen;
}

void RequireFullDegrees(const DegreeSpec& m) {
  if (!m.has_t()) {
    throw Error(ErrorCode::kInvalidInput,
                "this condition needs degrees on both S and T");
  }
}

void RequirePositivelyIntersecting(const SetFunction& p_t) {
  if (auto v = ClassifySupermodular(p_t, SupermodularMode::kIntersecting,
                                    /*positively=*/true)) {
    throw Error(ErrorCode::kNotSupermodular,
                "p_T is not positively intersecting supermodular (masks " +
                    std::to_string(v->x) + ", " + std::to_string(v->y) + ")");
  }
}

void RequireFullySupermodular(const SetFunction& p_t) {
  if (auto v = ClassifySupermodular(p_t, SupermodularMode::kFull,
                                    /*positively=*/false)) {
    throw Error(ErrorCode::kNotSupermodular,
                "p_T is not fully supermodular (masks " + std::to_string(v->x) +
                    ", " + std::to_string(v->y) + ")");
  }
}

std::optional<CheckResult> EmptySetDemand(const SetFunction& p_t) {
  if (p_t(0) <= 0) return std::nullopt;
  CheckResult result;
  ViolationCert cert;
  cert.which = Condition::kEmptySetDemand;
  cert.lhs = p_t(0);
  cert.rhs = 0;
  result.cert = cert;
  result.max_excess = p_t(0);
  result.evaluated = 1;
  return result;
}

CheckResult Relabel(CheckResult result, Condition which) {
  if (result.cert) result.cert->which = which;
  return result;
}

}  // namespace

std::string_view ConditionName(Condition c) {
  for (const auto& [cond, name] : kConditionNames) {
    if (cond == c) return name;
  }
  return "unknown";
}

std::optional<Condition> ConditionFromName(std::string_view name) {
  for (const auto& [cond, n] : kConditionNames) {
    if (n == name) return cond;
  }
  return std::nullopt;
}

void ValidateInstance(const Instance& inst) {
  const GroundSets& g = inst.grounds();
  if (!inst.h0.simple()) {
    throw Error(ErrorCode::kNotSimple, "h0 must be simple");
  }
  if (static_cast<int>(inst.degrees.s_degrees().size()) != g.s_size() ||
      (inst.degrees.has_t() &&
       static_cast<int>(inst.degrees.t_degrees().size()) != g.t_size())) {
    throw Error(ErrorCode::kGroundMismatch, "degree lists do not match S, T");
  }
  if (inst.matroid_s.ground() != g.s_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "M_S is not a matroid on S");
  }
  if (inst.demand_t.ground() != g.t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "p_T is not defined on T");
  }
  if (inst.matroid_t && inst.matroid_t->ground() != g.t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "M_T is not a matroid on T");
  }
  if (inst.target_rank && *inst.target_rank < 0) {
    throw Error(ErrorCode::kInvalidInput, "target rank must be non-negative");
  }
}

void ForEachSubpartition(
    Mask universe, const std::function<void(std::span<const Mask>)>& visit) {
  const std::vector<int> elements = Elements(universe);
  std::vector<Mask> blocks;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == elements.size()) {
      visit(blocks);
      return;
    }
    const Mask bit = Mask{1} << elements[i];
    self(self, i + 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      self(self, i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, i + 1);
    blocks.pop_back();
  };
  recurse(recurse, 0);
}

CheckResult CheckOre(const Bigraph& g0, const DegreeSpec& m) {
  RequireFullDegrees(m);
  const GroundSets& g = g0.grounds();
  const int ns = g.s_size();
  const int nt = g.t_size();
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  // row[s][Y] = d(s, Y), with multiplicity.
  std::vector<std::vector<int>> row(ns, std::vector<int>(std::size_t{1} << nt));
  for (int s = 0; s < ns; ++s) {
    for (Mask y = 1; y <= g.full_t(); ++y) {
      const int t = std::countr_zero(y);
      row[s][y] = row[s][y & (y - 1)] + g0.multiplicity(s, t);
    }
  }
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      int cut = 0;
      for (Mask rest = x; rest != 0; rest &= rest - 1) {
        cut += row[std::countr_zero(rest)][y];
      }
      best.Offer(sum_s[x] + sum_t[y] - cut - m.total(), g.Join(x, y));
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kOre;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

CheckResult CheckMsmt(const Instance& inst) {
  ValidateInstance(inst);
  RequireFullDegrees(inst.degrees);
  RequirePositivelyIntersecting(inst.demand_t);
  if (auto empty = EmptySetDemand(inst.demand_t)) return *empty;

  const GroundSets& g = inst.grounds();
  const DegreeSpec& m = inst.degrees;
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  const std::vector<Mask> gamma_h0 = NeighborTable(inst.h0);
  const std::size_t t_count = std::size_t{1} << g.t_size();

  Best best;
  std::vector<long> weight(t_count, 0);
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask part = 1; part < t_count; ++part) {
      weight[part] =
          inst.demand_t(part) - inst.matroid_s.rank(x | gamma_h0[part]);
    }
    const std::vector<long> sub = BestSubpartitionValues(weight);
    for (Mask y = 0; y <= g.full_t(); ++y) {
      const long d_g0 = Popcount(x) * Popcount(y) - SimpleCut(inst.h0, x, y);
      const long lhs = sum_s[x] + sum_t[y] - d_g0 + sub[g.full_t() & ~y];
      best.Offer(lhs - m.total(), g.Join(x, y));
    }
  }

  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kMsmt;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    for (Mask part = 1; part < t_count; ++part) {
      weight[part] =
          inst.demand_t(part) - inst.matroid_s.rank(cert.x | gamma_h0[part]);
    }
    const long d_g0 =
        Popcount(cert.x) * Popcount(cert.y) - SimpleCut(inst.h0, cert.x, cert.y);
    const long base = sum_s[cert.x] + sum_t[cert.y] - d_g0;
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    cert.parts = LexFirstOptimalSubpartition(g.full_t() & ~cert.y, weight,
                                             cert.lhs - base);
    result.cert = cert;
  }
  return result;
}

CheckResult CheckMsOnly(const Instance& inst) {
  ValidateInstance(inst);
  RequirePositivelyIntersecting(inst.demand_t);
  const GroundSets& g = inst.grounds();
  const DegreeSpec& m = inst.degrees;

  CheckResult result;
  for (int s = 0; s < g.s_size(); ++s) {
    const long lhs = m.s_degrees()[s] + inst.h0.s_degree(s);
    ++result.evaluated;
    if (lhs > g.t_size()) {
      ViolationCert cert;
      cert.which = Condition::kMsDegreeBound;
      cert.x = Mask{1} << s;
      cert.lhs = lhs;
      cert.rhs = g.t_size();
      result.cert = cert;
      result.max_excess = lhs - g.t_size();
      return result;
    }
  }
  if (auto empty = EmptySetDemand(inst.demand_t)) return *empty;

  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<Mask> gamma_h0 = NeighborTable(inst.h0);
  const std::size_t t_count = std::size_t{1} << g.t_size();
  std::vector<long> weight(t_count, 0);
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask part = 1; part < t_count; ++part) {
      weight[part] =
          inst.demand_t(part) - inst.matroid_s.rank(x | gamma_h0[part]);
    }
    const std::vector<long> sub = BestSubpartitionValues(weight);
    best.Offer(sum_s[x] + sub[g.full_t()] - m.total(), x);
  }
  result.max_excess = best.excess();
  result.evaluated += best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kMsOnly;
    cert.x = best.primary();
    for (Mask part = 1; part < t_count; ++part) {
      weight[part] =
          inst.demand_t(part) - inst.matroid_s.rank(cert.x | gamma_h0[part]);
    }
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    cert.parts = LexFirstOptimalSubpartition(g.full_t(), weight,
                                             cert.lhs - sum_s[cert.x]);
    result.cert = cert;
  }
  return result;
}

CheckResult CheckFully(const Instance& inst) {
  ValidateInstance(inst);
  RequireFullDegrees(inst.degrees);
  RequireFullySupermodular(inst.demand_t);
  if (auto empty = EmptySetDemand(inst.demand_t)) return *empty;

  CheckResult ore = CheckOre(BipartiteComplement(inst.h0), inst.degrees);
  if (!ore.pass()) return ore;

  const GroundSets& g = inst.grounds();
  const DegreeSpec& m = inst.degrees;
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  const std::vector<Mask> gamma_h0 = NeighborTable(inst.h0);
  const std::size_t t_count = std::size_t{1} << g.t_size();
  std::vector<long> weight(t_count, 0);
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask t0 = 0; t0 < t_count; ++t0) {
      weight[t0] = inst.demand_t(t0) - inst.matroid_s.rank(x | gamma_h0[t0]);
    }
    for (Mask y = 0; y <= g.full_t(); ++y) {
      const long d_g0 = Popcount(x) * Popcount(y) - SimpleCut(inst.h0, x, y);
      const long base = sum_s[x] + sum_t[y] - d_g0 - m.total();
      const Mask rest = g.full_t() & ~y;
      for (Mask t0 = rest;; t0 = (t0 - 1) & rest) {
        best.Offer(base + weight[t0], g.Join(x, y), t0);
        if (t0 == 0) break;
      }
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = ore.evaluated + best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kFullySingle;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.t0 = best.secondary();
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

CheckResult CheckCsakMatroid(const Instance& inst, bool monotone_form) {
  ValidateInstance(inst);
  RequireFullDegrees(inst.degrees);
  if (inst.h0.edge_count() != 0) {
    throw Error(ErrorCode::kPrecondition,
                "this corollary needs an edgeless initial graph");
  }
  RequireFullySupermodular(inst.demand_t);
  const SetFunction& p = inst.demand_t;
  const GroundSets& g = inst.grounds();
  if (monotone_form) {
    for (Mask b = 0; b <= g.full_t(); ++b) {
      for (int t : Elements(b)) {
        if (p(b & ~(Mask{1} << t)) > p(b)) {
          throw Error(ErrorCode::kPrecondition, "p_T is not monotone");
        }
      }
    }
  }
  if (auto empty = EmptySetDemand(p)) return *empty;
  CheckResult ore = Relabel(CheckOre(Bigraph::Complete(g), inst.degrees),
                            Condition::kOreComplete);
  if (!ore.pass()) return ore;

  const DegreeSpec& m = inst.degrees;
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      const long base = sum_s[x] + sum_t[y] - Popcount(x) * Popcount(y) -
                        inst.matroid_s.rank(x) - m.total();
      const Mask rest = g.full_t() & ~y;
      if (monotone_form) {
        best.Offer(base + p(rest), g.Join(x, y), rest);
        continue;
      }
      for (Mask t0 = rest;; t0 = (t0 - 1) & rest) {
        best.Offer(base + p(t0), g.Join(x, y), t0);
        if (t0 == 0) break;
      }
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = ore.evaluated + best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = monotone_form ? Condition::kCsakMatroidMonotone
                               : Condition::kCsakMatroid;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.t0 = best.secondary();
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

namespace {

void RequireRyserPreconditions(const GroundSets& g, const DegreeSpec& m,
                               int ell) {
  RequireFullDegrees(m);
  if (ell < 0 || ell > g.t_size()) {
    throw Error(ErrorCode::kPrecondition, "l must lie in [0, |T|]");
  }
  if (!CheckOre(Bigraph::Complete(g), m).pass()) {
    throw Error(ErrorCode::kPrecondition,
                "no simple bigraph fits the degree specification");
  }
}

CheckResult RyserResult(const GroundSets& g, const DegreeSpec& m,
                        const Best& best) {
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kRyser;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

long RyserExcess(const DegreeSpec& m, const std::vector<int>& sum_s,
                 const std::vector<int>& sum_t, Mask x, Mask y, int ell) {
  const long nx = Popcount(x);
  const long ny = Popcount(y);
  return sum_s[x] + sum_t[y] - nx * ny + (ell - nx - ny) - m.total();
}

// Node indices sorted by degree, largest first; ties by index.
std::vector<int> ByDegreeDescending(const std::vector<int>& degrees) {
  std::vector<int> order(degrees.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degrees[a] > degrees[b]; });
  return order;
}

}  // namespace

CheckResult CheckRyserPrefix(const GroundSets& g, const DegreeSpec& m,
                             int ell) {
  RequireRyserPreconditions(g, m, ell);
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  const std::vector<int> s_order = ByDegreeDescending(m.s_degrees());
  const std::vector<int> t_order = ByDegreeDescending(m.t_degrees());
  Best best;
  Mask x = 0;
  for (int i = 0; i <= g.s_size(); ++i) {
    if (i > 0) x |= Mask{1} << s_order[i - 1];
    Mask y = 0;
    for (int j = 0; j <= g.t_size(); ++j) {
      if (j > 0) y |= Mask{1} << t_order[j - 1];
      best.Offer(RyserExcess(m, sum_s, sum_t, x, y, ell), g.Join(x, y));
    }
  }
  return RyserResult(g, m, best);
}

CheckResult CheckRyser(const GroundSets& g, const DegreeSpec& m, int ell) {
  RequireRyserPreconditions(g, m, ell);
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      best.Offer(RyserExcess(m, sum_s, sum_t, x, y, ell), g.Join(x, y));
    }
  }
  CheckResult full = RyserResult(g, m, best);
  CheckResult prefix = CheckRyserPrefix(g, m, ell);
  if (prefix.max_excess != full.max_excess) {
    throw std::logic_error(
        "sorted-prefix and full Ryser enumerations disagree");
  }
  return full;
}

void RequireRanks(const Matroid& m_s, const Matroid& m_t, int ell) {
  if (ell < 0) throw Error(ErrorCode::kInvalidInput, "l must be non-negative");
  if (ell > std::min(m_s.rank(), m_t.rank())) {
    throw Error(ErrorCode::kRankHypothesis,
                "l = " + std::to_string(ell) +
                    " exceeds min(r_S(S), r_T(T)) = " +
                    std::to_string(std::min(m_s.rank(), m_t.rank())));
  }
  if (m_s.rank() != ell || m_t.rank() != ell) {
    throw Error(ErrorCode::kRankMismatch,
                "need r_S(S) = r_T(T) = l; got " + std::to_string(m_s.rank()) +
                    ", " + std::to_string(m_t.rank()) + ", l = " +
                    std::to_string(ell));
  }
}

CheckResult CheckBrualdiCoverForm(const Bigraph& gplus, const Matroid& m_s,
                                  const Matroid& m_t) {
  const GroundSets& g = gplus.grounds();
  if (m_s.ground() != g.s_ids() || m_t.ground() != g.t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "matroids are not on S and T");
  }
  if (m_s.rank() != m_t.rank()) {
    throw Error(ErrorCode::kRankMismatch, "r_S(S) != r_T(T)");
  }
  const int ell = m_s.rank();
  Best best;
  for (Mask xp = 0; xp <= g.full_s(); ++xp) {
    // Y' must contain every T-neighbour of S - X'.
    Mask need = 0;
    for (int s : Elements(g.full_s() & ~xp)) need |= gplus.s_neighbors(s);
    const Mask free = g.full_t() & ~need;
    for (Mask extra = free;; extra = (extra - 1) & free) {
      const Mask yp = need | extra;
      best.Offer(ell - m_s.rank(xp) - m_t.rank(yp), g.Join(xp, yp));
      if (extra == 0) break;
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kBrualdiCover;
    cert.x_prime = g.SPart(best.primary());
    cert.y_prime = g.TPart(best.primary());
    cert.lhs = best.excess();
    cert.rhs = 0;
    result.cert = cert;
  }
  return result;
}

CheckResult CheckBrualdiNeighborForm(const Bigraph& gplus, const Matroid& m_s,
                                     const Matroid& m_t) {
  const GroundSets& g = gplus.grounds();
  if (m_s.ground() != g.s_ids() || m_t.ground() != g.t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "matroids are not on S and T");
  }
  if (m_s.rank() != m_t.rank()) {
    throw Error(ErrorCode::kRankMismatch, "r_S(S) != r_T(T)");
  }
  const std::vector<Mask> gamma = NeighborTable(gplus);
  Best best;
  for (Mask y = 0; y <= g.full_t(); ++y) {
    best.Offer(m_t.Corank(y) - m_s.rank(gamma[y]), g.Join(0, y));
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kBrualdiNeighbor;
    cert.y = g.TPart(best.primary());
    cert.lhs = m_t.Corank(cert.y);
    cert.rhs = m_s.rank(gamma[cert.y]);
    result.cert = cert;
  }
  return result;
}

CheckResult CheckBrualdi(const Bigraph& gplus, const Matroid& m_s,
                         const Matroid& m_t) {
  CheckResult cover = CheckBrualdiCoverForm(gplus, m_s, m_t);
  CheckResult neighbor = CheckBrualdiNeighborForm(gplus, m_s, m_t);
  if (cover.pass() != neighbor.pass()) {
    throw std::logic_error("the two forms of the Brualdi condition disagree");
  }
  return cover;
}

CheckResult CheckRyserGen(const Instance& inst) {
  ValidateInstance(inst);
  RequireFullDegrees(inst.degrees);
  if (!inst.matroid_t || !inst.target_rank) {
    throw Error(ErrorCode::kInvalidInput, "ryser_gen needs M_T and l");
  }
  const Matroid& m_s = inst.matroid_s;
  const Matroid& m_t = *inst.matroid_t;
  const int ell = *inst.target_rank;
  RequireRanks(m_s, m_t, ell);

  const GroundSets& g = inst.grounds();
  const DegreeSpec& m = inst.degrees;
  CheckResult ore = CheckOre(BipartiteComplement(inst.h0), m);
  CheckResult result;
  if (!ore.pass()) {
    result = ore;
  } else {
    const std::vector<int> sum_s = SubsetSums(m.s_degrees());
    const std::vector<int> sum_t = SubsetSums(m.t_degrees());
    const std::size_t t_count = std::size_t{1} << g.t_size();
    std::vector<long> alpha((std::size_t{1} << g.s_size()) * t_count);
    for (Mask x = 0; x <= g.full_s(); ++x) {
      for (Mask y = 0; y <= g.full_t(); ++y) {
        alpha[x * t_count + y] = sum_s[x] + sum_t[y] - Popcount(x) * Popcount(y) +
                                 SimpleCut(inst.h0, x, y);
      }
    }
    Best best;
    for (Mask xp = 0; xp <= g.full_s(); ++xp) {
      Mask need = 0;
      for (int s : Elements(g.full_s() & ~xp)) need |= inst.h0.s_neighbors(s);
      const Mask free = g.full_t() & ~need;
      for (Mask extra = free;; extra = (extra - 1) & free) {
        const Mask yp = need | extra;
        const long tail = ell - m_s.rank(xp) - m_t.rank(yp) - m.total();
        for (Mask x = xp;; x = (x - 1) & xp) {
          for (Mask y = yp;; y = (y - 1) & yp) {
            best.Offer(alpha[x * t_count + y] + tail, g.Join(x, y),
                       g.Join(xp, yp));
            if (y == 0) break;
          }
          if (x == 0) break;
        }
        if (extra == 0) break;
      }
    }
    result.max_excess = best.excess();
    result.evaluated = ore.evaluated + best.evaluated();
    if (best.excess() > 0) {
      ViolationCert cert;
      cert.which = Condition::kRyserGen;
      cert.x = g.SPart(best.primary());
      cert.y = g.TPart(best.primary());
      cert.x_prime = g.SPart(best.secondary());
      cert.y_prime = g.TPart(best.secondary());
      cert.lhs = best.excess() + m.total();
      cert.rhs = m.total();
      result.cert = cert;
    }
  }

  // With p_T the co-rank of M_T the single-set condition must give the same
  // verdict.
  Instance reduced = inst;
  reduced.demand_t = SetFunction::Corank(m_t);
  if (CheckFully(reduced).pass() != result.pass()) {
    throw std::logic_error(
        "matroidal term rank condition disagrees with its co-rank reduction");
  }
  return result;
}

CheckResult CheckRyserMatroid(const GroundSets& g, const DegreeSpec& m,
                              const Matroid& m_s, const Matroid& m_t, int ell) {
  RequireFullDegrees(m);
  RequireRanks(m_s, m_t, ell);
  CheckResult ore =
      Relabel(CheckOre(Bigraph::Complete(g), m), Condition::kOreComplete);
  if (!ore.pass()) return ore;
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      best.Offer(sum_s[x] + sum_t[y] - Popcount(x) * Popcount(y) + ell -
                     m_s.rank(x) - m_t.rank(y) - m.total(),
                 g.Join(x, y));
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = ore.evaluated + best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kRyserMatroid;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

CheckResult CheckRyserNovel(const Bigraph& h0, const DegreeSpec& m, int ell) {
  RequireFullDegrees(m);
  const GroundSets& g = h0.grounds();
  if (ell < 0 || ell > std::min(g.s_size(), g.t_size())) {
    throw Error(ErrorCode::kRankHypothesis,
                "l must lie in [0, min(|S|, |T|)]");
  }
  CheckResult ore = CheckOre(BipartiteComplement(h0), m);
  if (!ore.pass()) return ore;
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  const std::size_t t_count = std::size_t{1} << g.t_size();
  std::vector<long> alpha((std::size_t{1} << g.s_size()) * t_count);
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      alpha[x * t_count + y] = sum_s[x] + sum_t[y] - Popcount(x) * Popcount(y) +
                               SimpleCut(h0, x, y);
    }
  }
  Best best;
  for (Mask xp = 0; xp <= g.full_s(); ++xp) {
    Mask need = 0;
    for (int s : Elements(g.full_s() & ~xp)) need |= h0.s_neighbors(s);
    const Mask free = g.full_t() & ~need;
    for (Mask extra = free;; extra = (extra - 1) & free) {
      const Mask yp = need | extra;
      const long tail = ell - Popcount(xp) - Popcount(yp) - m.total();
      for (Mask x = xp;; x = (x - 1) & xp) {
        for (Mask y = yp;; y = (y - 1) & yp) {
          best.Offer(alpha[x * t_count + y] + tail, g.Join(x, y),
                     g.Join(xp, yp));
          if (y == 0) break;
        }
        if (x == 0) break;
      }
      if (extra == 0) break;
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = ore.evaluated + best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kRyserNovel;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.x_prime = g.SPart(best.secondary());
    cert.y_prime = g.TPart(best.secondary());
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  return result;
}

CheckResult CheckIntegrated(const GroundSets& g, const DegreeSpec& m,
                            const Matroid& m_s, const Matroid& m_t, int ell) {
  RequireFullDegrees(m);
  RequireRanks(m_s, m_t, ell);
  const std::vector<int> sum_s = SubsetSums(m.s_degrees());
  const std::vector<int> sum_t = SubsetSums(m.t_degrees());
  Best best;
  for (Mask x = 0; x <= g.full_s(); ++x) {
    for (Mask y = 0; y <= g.full_t(); ++y) {
      const long rank_term =
          std::max<long>(0, ell - m_s.rank(x) - m_t.rank(y));
      best.Offer(sum_s[x] + sum_t[y] - Popcount(x) * Popcount(y) + rank_term -
                     m.total(),
                 g.Join(x, y));
    }
  }
  CheckResult result;
  result.max_excess = best.excess();
  result.evaluated = best.evaluated();
  if (best.excess() > 0) {
    ViolationCert cert;
    cert.which = Condition::kIntegrated;
    cert.x = g.SPart(best.primary());
    cert.y = g.TPart(best.primary());
    cert.lhs = best.excess() + m.total();
    cert.rhs = m.total();
    result.cert = cert;
  }
  if (result.pass() != CheckRyserMatroid(g, m, m_s, m_t, ell).pass()) {
    throw std::logic_error(
        "integrated inequality disagrees with Ore plus the matroid form");
  }
  return result;
}

}  // namespace termrank
