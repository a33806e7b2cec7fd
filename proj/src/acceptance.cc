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

#include "termrank/acceptance.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "termrank/commands.h"
#include "termrank/cover.h"
#include "termrank/error.h"
#include "termrank/feasibility.h"
#include "termrank/harness.h"

namespace termrank {

namespace {

// Counts checks and keeps the first failure for the report line.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void Record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  void Record(const std::optional<std::string>& failure,
              const std::string& where) {
    Record(!failure, failure ? where + ": " + *failure : "");
  }
  bool ok() const { return failed == 0; }
  std::string Summary(const std::string& noun) const {
    std::ostringstream out;
    out << (checked - failed) << "/" << checked << " " << noun;
    if (!ok()) out << "; first failure: " << first;
    return out.str();
  }
};

std::string Where(const char* what, long index) {
  return std::string(what) + " #" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Independent validators. They work from edge lists and raw degree vectors
// rather than the Bigraph bookkeeping.

int Sum(const std::vector<int>& values, Mask m) {
  int total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if ((m >> i) & 1u) total += values[i];
  }
  return total;
}

int Gamma(const DegreeSpec& m) {
  int total = 0;
  for (int d : m.s_degrees()) total += d;
  return total;
}

Mask NeighboursOf(const std::vector<Edge>& edges, Mask y) {
  Mask out = 0;
  for (const Edge& e : edges) {
    if ((y >> e.t) & 1u) out |= Mask{1} << e.s;
  }
  return out;
}

int MissingPairs(const std::vector<Edge>& h0, Mask x, Mask y) {
  int count = 0;
  for (int s : Elements(x)) {
    for (int t : Elements(y)) {
      bool present = false;
      for (const Edge& e : h0) present = present || (e.s == s && e.t == t);
      if (!present) ++count;
    }
  }
  return count;
}

bool HitsAll(const std::vector<Edge>& edges, Mask xp, Mask yp) {
  for (const Edge& e : edges) {
    if (!((xp >> e.s) & 1u) && !((yp >> e.t) & 1u)) return false;
  }
  return true;
}

std::optional<std::string> ValidateAugmentation(const std::vector<Edge>& edges,
                                                const Instance& inst) {
  const GroundSets& g = inst.grounds();
  std::vector<int> ds(g.s_size(), 0);
  std::vector<int> dt(g.t_size(), 0);
  std::map<std::pair<int, int>, int> seen;
  for (const Edge& e : edges) {
    ++ds[e.s];
    ++dt[e.t];
    ++seen[{e.s, e.t}];
  }
  if (ds != inst.degrees.s_degrees()) return "S-degrees do not fit";
  if (inst.degrees.has_t() && dt != inst.degrees.t_degrees()) {
    return "T-degrees do not fit";
  }
  const std::vector<Edge> h0 = inst.h0.edges();
  for (const Edge& e : h0) ++seen[{e.s, e.t}];
  for (const auto& [pair, count] : seen) {
    if (count > 1) return "G+H0 has a repeated edge";
  }
  std::vector<Edge> plus = edges;
  plus.insert(plus.end(), h0.begin(), h0.end());
  for (Mask y = 0; y <= g.full_t(); ++y) {
    if (inst.matroid_s.rank(NeighboursOf(plus, y)) < inst.demand_t(y)) {
      return "G+H0 is not M_S-covering";
    }
  }
  return std::nullopt;
}

std::optional<std::string> ValidateMatching(const std::vector<Edge>& matching,
                                            const std::vector<Edge>& gplus,
                                            const Matroid& m_s,
                                            const Matroid& m_t, int ell) {
  Mask s_ends = 0;
  Mask t_ends = 0;
  for (const Edge& e : matching) {
    bool present = false;
    for (const Edge& f : gplus) present = present || f == e;
    if (!present) return "matching edge outside G+H0";
    if (((s_ends >> e.s) & 1u) || ((t_ends >> e.t) & 1u)) {
      return "matching edges share an end";
    }
    s_ends |= Mask{1} << e.s;
    t_ends |= Mask{1} << e.t;
  }
  if (static_cast<int>(matching.size()) != ell) return "matching size != l";
  if (m_s.rank(s_ends) != ell || m_s.rank(m_s.full()) != ell) {
    return "S-ends are not a basis";
  }
  if (m_t.rank(t_ends) != ell || m_t.rank(m_t.full()) != ell) {
    return "T-ends are not a basis";
  }
  return std::nullopt;
}

struct CertContext {
  const Instance* inst = nullptr;  // h0, degrees, M_S, p_T, M_T, l
  // Brualdi certificates refer to G+ instead of h0.
  const Bigraph* gplus = nullptr;
};

std::optional<std::string> ValidateCert(const ViolationCert& c,
                                        const CertContext& ctx) {
  const Instance& inst = *ctx.inst;
  const GroundSets& g = inst.grounds();
  const std::vector<Edge> h0 = inst.h0.edges();
  const DegreeSpec& m = inst.degrees;
  const int ell = inst.target_rank.value_or(0);
  const Mask x = c.x;
  const Mask y = c.y;
  const long nx = Popcount(x);
  const long ny = Popcount(y);
  auto ore = [&] {
    return Sum(m.s_degrees(), x) + Sum(m.t_degrees(), y) -
           MissingPairs(h0, x, y);
  };
  auto complete = [&] {
    return Sum(m.s_degrees(), x) + Sum(m.t_degrees(), y) - nx * ny;
  };
  auto part_value = [&](Mask part) {
    return inst.demand_t(part) -
           inst.matroid_s.rank(x | NeighboursOf(h0, part));
  };

  Mask used = 0;
  for (Mask part : c.parts) {
    if (part == 0) return "empty part";
    if ((part & used) != 0) return "overlapping parts";
    if ((part & y) != 0) return "part meets Y";
    if ((part & ~g.full_t()) != 0) return "part outside T";
    used |= part;
  }

  long lhs = 0;
  long rhs = Gamma(m);
  switch (c.which) {
    case Condition::kOre:
      lhs = ore();
      break;
    case Condition::kOreComplete:
      lhs = complete();
      break;
    case Condition::kMsmt:
      lhs = ore();
      for (Mask part : c.parts) lhs += part_value(part);
      break;
    case Condition::kMsDegreeBound: {
      if (nx != 1) return "degree-bound certificate needs one node";
      const int s = Elements(x)[0];
      int d = 0;
      for (const Edge& e : h0) d += e.s == s;
      lhs = m.s_degrees()[s] + d;
      rhs = g.t_size();
      break;
    }
    case Condition::kMsOnly:
      lhs = Sum(m.s_degrees(), x);
      for (Mask part : c.parts) lhs += part_value(part);
      break;
    case Condition::kFullySingle:
      if (!c.t0 || (*c.t0 & y) != 0) return "bad T0";
      lhs = ore() + part_value(*c.t0);
      break;
    case Condition::kCsakMatroid:
    case Condition::kCsakMatroidMonotone:
      if (!c.t0 || (*c.t0 & y) != 0) return "bad T0";
      lhs = complete() + inst.demand_t(*c.t0) - inst.matroid_s.rank(x);
      break;
    case Condition::kRyser:
      lhs = complete() + ell - nx - ny;
      break;
    case Condition::kBrualdiCover: {
      if (!c.x_prime || !c.y_prime || !ctx.gplus) return "missing cover";
      if (!HitsAll(ctx.gplus->edges(), *c.x_prime, *c.y_prime)) {
        return "X' + Y' is not a cover of G+";
      }
      lhs = ell - inst.matroid_s.rank(*c.x_prime) -
            inst.matroid_t->rank(*c.y_prime);
      rhs = 0;
      break;
    }
    case Condition::kBrualdiNeighbor: {
      if (!ctx.gplus) return "missing G+";
      const Matroid& mt = *inst.matroid_t;
      lhs = mt.rank(mt.full()) - mt.rank(mt.full() & ~y);
      rhs = inst.matroid_s.rank(NeighboursOf(ctx.gplus->edges(), y));
      break;
    }
    case Condition::kRyserGen:
    case Condition::kRyserNovel: {
      if (!c.x_prime || !c.y_prime) return "missing X', Y'";
      if (!IsSubset(x, *c.x_prime) || !IsSubset(y, *c.y_prime)) {
        return "X, Y not inside X', Y'";
      }
      if (!HitsAll(h0, *c.x_prime, *c.y_prime)) return "X' + Y' misses H0";
      lhs = ore() + ell;
      if (c.which == Condition::kRyserGen) {
        lhs -= inst.matroid_s.rank(*c.x_prime) +
               inst.matroid_t->rank(*c.y_prime);
      } else {
        lhs -= Popcount(*c.x_prime) + Popcount(*c.y_prime);
      }
      break;
    }
    case Condition::kRyserMatroid:
      lhs = complete() + ell - inst.matroid_s.rank(x) - inst.matroid_t->rank(y);
      break;
    case Condition::kIntegrated:
      lhs = complete() +
            std::max(0, ell - inst.matroid_s.rank(x) - inst.matroid_t->rank(y));
      break;
    case Condition::kEmptySetDemand:
      lhs = inst.demand_t(0);
      rhs = 0;
      break;
  }
  if (lhs != c.lhs || rhs != c.rhs) {
    return std::string(ConditionName(c.which)) + " recomputes to " +
           std::to_string(lhs) + " > " + std::to_string(rhs) +
           ", certificate says " + std::to_string(c.lhs) + " > " +
           std::to_string(c.rhs);
  }
  if (lhs <= rhs) return "certificate is not a violation";
  return std::nullopt;
}

void RecordCert(Tally& tally, const CheckResult& r, const CertContext& ctx,
                const std::string& where) {
  if (r.cert) tally.Record(ValidateCert(*r.cert, ctx), where);
}

// Plain subgraph existence: DFS over the G0 edges with residual degrees.
bool OreExists(const std::vector<Edge>& g0, std::vector<int> rs,
               std::vector<int> rt) {
  std::vector<int> left_s(rs.size(), 0);
  std::vector<int> left_t(rt.size(), 0);
  for (const Edge& e : g0) {
    ++left_s[e.s];
    ++left_t[e.t];
  }
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t s = 0; s < rs.size(); ++s) {
      if (rs[s] > left_s[s]) return false;
    }
    for (std::size_t t = 0; t < rt.size(); ++t) {
      if (rt[t] > left_t[t]) return false;
    }
    if (i == g0.size()) return true;
    const Edge e = g0[i];
    --left_s[e.s];
    --left_t[e.t];
    bool found = false;
    if (rs[e.s] > 0 && rt[e.t] > 0) {
      --rs[e.s];
      --rt[e.t];
      found = self(self, i + 1);
      ++rs[e.s];
      ++rt[e.t];
    }
    if (!found) found = self(self, i + 1);
    ++left_s[e.s];
    ++left_t[e.t];
    return found;
  };
  return rec(rec, 0);
}

// All l-edge subsets of G+, looking for a matching that covers bases.
bool MatchingOracle(const std::vector<Edge>& edges, const Matroid& m_s,
                    const Matroid& m_t, int ell) {
  const int n = static_cast<int>(edges.size());
  for (Mask pick = 0; pick < (Mask{1} << n); ++pick) {
    if (Popcount(pick) != ell) continue;
    std::vector<Edge> chosen;
    for (int i : Elements(pick)) chosen.push_back(edges[i]);
    if (!ValidateMatching(chosen, edges, m_s, m_t, ell)) return true;
  }
  return false;
}

// Positive supermodularity on T-intersecting (optionally ST-crossing) pairs,
// straight from the definition.
bool PositivelySupermodular(const SetFunction& p, const GroundSets& g,
                            bool crossing) {
  const Mask s_part = g.s_in_v();
  const Mask t_part = g.t_in_v();
  for (Mask a = 0; a <= g.full_v(); ++a) {
    if (p(a) <= 0) continue;
    for (Mask b = a + 1; b <= g.full_v(); ++b) {
      if (p(b) <= 0) continue;
      if ((a & b & t_part) == 0) continue;
      if (IsSubset(a, b) || IsSubset(b, a)) continue;
      if (crossing && (s_part & ~(a | b)) == 0) continue;
      if (p(a) + p(b) > p(a & b) + p(a | b)) return false;
    }
  }
  return true;
}

bool Covers(const GroundSets& g, const std::vector<Edge>& arcs,
            const SetFunction& p) {
  for (Mask v = 0; v <= g.full_v(); ++v) {
    int entering = 0;
    for (const Edge& a : arcs) {
      const bool tail_in = (v >> a.s) & 1u;
      const bool head_in = (v >> (g.s_size() + a.t)) & 1u;
      entering += !tail_in && head_in;
    }
    if (entering < p(v)) return false;
  }
  return true;
}

bool Independent(const GroundSets& g, const std::vector<Mask>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Mask a = family[i];
      const Mask b = family[j];
      // Some arc s -> t enters both: s outside both, t inside both.
      for (int s = 0; s < g.s_size(); ++s) {
        for (int t = 0; t < g.t_size(); ++t) {
          const Mask sb = Mask{1} << s;
          const Mask tb = Mask{1} << (g.s_size() + t);
          if (!(a & sb) && !(b & sb) && (a & tb) && (b & tb)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::string> Ids(char prefix, int n) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

// All vectors in {0..hi}^n grouped by their sum.
std::map<int, std::vector<std::vector<int>>> VectorsBySum(int n, int hi) {
  std::map<int, std::vector<std::vector<int>>> out;
  std::vector<int> v(n, 0);
  while (true) {
    int sum = 0;
    for (int d : v) sum += d;
    out[sum].push_back(v);
    int i = 0;
    while (i < n && v[i] == hi) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

// Non-decreasing vectors in {0..hi}^n grouped by their sum.
std::map<int, std::vector<std::vector<int>>> SortedVectorsBySum(int n, int hi) {
  std::map<int, std::vector<std::vector<int>>> out;
  std::vector<int> v(n, 0);
  auto rec = [&](auto&& self, int i, int lo, int sum) -> void {
    if (i == n) {
      out[sum].push_back(v);
      return;
    }
    for (int d = lo; d <= hi; ++d) {
      v[i] = d;
      self(self, i + 1, d, sum + d);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::vector<int> SubsetSumTable(const std::vector<int>& values) {
  std::vector<int> sums(std::size_t{1} << values.size(), 0);
  for (Mask m = 1; m < sums.size(); ++m) {
    sums[m] = sums[m & (m - 1)] + values[std::countr_zero(m)];
  }
  return sums;
}

// Naive max over all X, Y of the classic Ryser excess with l = 0; the l term
// only shifts it.
long RyserFullExcess(const DegreeSpec& m, int ns, int nt) {
  const std::vector<int> ss = SubsetSumTable(m.s_degrees());
  const std::vector<int> st = SubsetSumTable(m.t_degrees());
  long best = std::numeric_limits<long>::min();
  const int gamma = Gamma(m);
  for (Mask x = 0; x < (Mask{1} << ns); ++x) {
    for (Mask y = 0; y < (Mask{1} << nt); ++y) {
      const long nx = Popcount(x);
      const long ny = Popcount(y);
      best = std::max(best, ss[x] + st[y] - nx * ny - nx - ny - gamma);
    }
  }
  return best;
}

bool OreCompletePasses(const DegreeSpec& m, int ns, int nt) {
  const int gamma = Gamma(m);
  for (Mask x = 0; x < (Mask{1} << ns); ++x) {
    for (Mask y = 0; y < (Mask{1} << nt); ++y) {
      if (Sum(m.s_degrees(), x) + Sum(m.t_degrees(), y) -
              Popcount(x) * Popcount(y) >
          gamma) {
        return false;
      }
    }
  }
  return true;
}

// True when no relabeling of S and T maps the H0 edge mask (bit s*nt+t)
// to a smaller mask.
bool IsCanonicalPattern(Mask f, int ns, int nt) {
  std::vector<int> sp(ns);
  std::vector<int> tp(nt);
  std::iota(sp.begin(), sp.end(), 0);
  do {
    std::iota(tp.begin(), tp.end(), 0);
    do {
      Mask image = 0;
      for (int i : Elements(f)) image |= Mask{1} << (sp[i / nt] * nt + tp[i % nt]);
      if (image < f) return false;
    } while (std::next_permutation(tp.begin(), tp.end()));
  } while (std::next_permutation(sp.begin(), sp.end()));
  return true;
}

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& options) : opt_(options) {}

  std::vector<CriterionResult> Run() {
    std::vector<CriterionResult> out;
    Timed(out, 1, "msmt equivalence", [&] { return Criterion1to3(); });
    out.push_back(c2_);
    out.push_back(c3_);
    Timed(out, 4, "Ore theorem", [&] { return Criterion4(); });
    Timed(out, 5, "Brualdi forms and matching search", [&] { return Criterion5(); });
    Timed(out, 6, "reduction lattice", [&] { return Criterion6(); });
    out.push_back({7, "witness postconditions", witnesses_.ok(),
                   witnesses_.Summary("witnesses valid"), 0});
    out.push_back({8, "certificate validity", certs_.ok(),
                   certs_.Summary("certificates recomputed"), 0});
    return out;
  }

 private:
  using Body = std::function<std::pair<bool, std::string>()>;

  void Timed(std::vector<CriterionResult>& out, int id, const char* name,
             const Body& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = name;
    try {
      std::tie(r.pass, r.detail) = body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    out.push_back(r);
  }

  Rng StreamRng(std::uint64_t stream, long index) {
    return InstanceRng(opt_.seed * 16 + stream, static_cast<std::uint64_t>(index));
  }

  std::pair<bool, std::string> Criterion1to3() {
    Tally agree;
    Tally minmax;
    Tally p0_ok;
    Tally p1_ok;
    long feasible = 0;
    long degenerate = 0;
    long outside = 0;
    GeneratorLimits limits;
    limits.max_s = 4;
    limits.max_t = 4;
    limits.max_degree = 3;
    for (long i = 0; i < opt_.msmt_instances; ++i) {
      Rng rng = StreamRng(1, i);
      const InstanceFile file = RandomInstance(rng, Mode::kMsmt, limits);
      const Instance& inst = file.instance;
      const GroundSets& g = inst.grounds();
      const std::string where = Where("msmt instance", i);
      const CertContext ctx{&inst, nullptr};

      const CheckResult r = CheckMsmt(inst);
      RecordCert(certs_, r, ctx, where);
      feasible += r.pass();
      const std::optional<Bigraph> brute = ConstructBrute(inst);
      if (brute) witnesses_.Record(ValidateAugmentation(brute->edges(), inst), where);
      bool cover_ok = false;
      try {
        const Bigraph built = ConstructViaCover(inst);
        witnesses_.Record(ValidateAugmentation(built.edges(), inst), where);
        cover_ok = true;
      } catch (const InfeasibleError& e) {
        certs_.Record(ValidateCert(e.cert(), ctx), where);
      }
      agree.Record(r.pass() == brute.has_value() && r.pass() == cover_ok,
                   where + ": checker " + (r.pass() ? "pass" : "fail") +
                       ", brute " + (brute ? "found" : "none") + ", cover " +
                       (cover_ok ? "built" : "failed"));

      const SetFunction p0 =
          BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
      p0_ok.Record(PositivelySupermodular(p0, g, false),
                   where + ": p0 not positively T-intersecting supermodular");
      std::optional<SetFunction> p1;
      try {
        p1 = BuildP1(p0, inst.h0, inst.degrees);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateInstance) throw;
        ++degenerate;
        continue;
      }
      const bool crossing = PositivelySupermodular(*p1, g, true);
      if (r.pass()) {
        p1_ok.Record(crossing,
                     where + ": p1 not positively ST-crossing supermodular");
      }
      bool coverable = true;
      for (Mask v = 0; v <= g.full_v(); ++v) {
        if ((*p1)(v) > 0 && (g.TPart(v) == 0 || g.SPart(v) == g.full_s())) {
          coverable = false;
        }
      }
      if (!crossing || !coverable) {
        // A fit exists only if p1 has a cover of size gamma.
        minmax.Record(!r.pass(), where + ": feasible but p1 outside the "
                                         "cover preconditions");
        ++outside;
        continue;
      }
      const ArcCoverResult cover = MinArcCover(*p1, g);
      long dual_value = 0;
      for (Mask v : cover.dual.sets) dual_value += (*p1)(v);
      const long size = static_cast<long>(cover.arcs.size());
      std::string problem;
      if (!Covers(g, cover.arcs, *p1)) problem = "arcs do not cover p1";
      else if (!Independent(g, cover.dual.sets)) problem = "dual not independent";
      else if (dual_value != cover.dual.value) problem = "dual value mismatch";
      else if (size != dual_value) {
        problem = "min cover " + std::to_string(size) + " != max dual " +
                  std::to_string(dual_value);
      } else if (r.pass() && size != Gamma(inst.degrees)) {
        problem = "feasible but min cover != gamma";
      }
      minmax.Record(problem.empty(), where + ": " + problem);
    }
    std::ostringstream detail;
    detail << agree.Summary("agree") << " (" << feasible << " feasible)";
    c2_ = {2, "arc-cover min-max", minmax.ok(),
           minmax.Summary("p1 checks passed") + " (" +
               std::to_string(outside) + " outside preconditions, " +
               std::to_string(degenerate) + " degenerate)",
           0};
    c3_ = {3, "supermodularity of p0 and p1", p0_ok.ok() && p1_ok.ok(),
           p0_ok.Summary("p0 positively T-intersecting") + "; " +
               p1_ok.Summary("feasible p1 positively ST-crossing"),
           0};
    return {agree.ok(), detail.str()};
  }

  void OreCase(Tally& agree, const Bigraph& h0, const std::vector<int>& ms,
               const std::vector<int>& mt, const std::string& where) {
    const GroundSets& g = h0.grounds();
    const Bigraph g0 = BipartiteComplement(h0);
    const DegreeSpec spec = DegreeSpec::Full(g, ms, mt);
    const CheckResult r = CheckOre(g0, spec);
    const bool exists = OreExists(g0.edges(), ms, mt);
    agree.Record(r.pass() == exists, where + ": checker " +
                                         (r.pass() ? "pass" : "fail") +
                                         ", exhaustive " +
                                         (exists ? "found" : "none"));
    if (r.cert) {
      const Instance inst{h0, spec, Matroid::Free(g.s_ids()),
                          SetFunction::Zero(g.t_ids()), std::nullopt,
                          std::nullopt};
      certs_.Record(ValidateCert(*r.cert, {&inst, nullptr}), where);
    }
  }

  std::pair<bool, std::string> Criterion4() {
    Tally exhaustive;
    long patterns = 0;
    const int side = opt_.ore_exhaustive_side;
    for (int ns = 1; ns <= side; ++ns) {
      for (int nt = 1; nt <= side; ++nt) {
        const GroundSets g(Ids('s', ns), Ids('t', nt));
        const auto s_vectors = VectorsBySum(ns, 4);
        const auto t_vectors = VectorsBySum(nt, 4);
        const int pairs = ns * nt;
        for (Mask f = 0; f < (Mask{1} << pairs); ++f) {
          if (!IsCanonicalPattern(f, ns, nt)) continue;
          ++patterns;
          Bigraph h0(g);
          for (int i : Elements(f)) h0.AddEdge({i / nt, i % nt});
          for (const auto& [sum, s_list] : s_vectors) {
            auto it = t_vectors.find(sum);
            if (it == t_vectors.end()) continue;
            for (const auto& ms : s_list) {
              for (const auto& mt : it->second) {
                OreCase(exhaustive, h0, ms, mt,
                        std::to_string(ns) + "x" + std::to_string(nt) +
                            " H0 mask " + std::to_string(f));
              }
            }
          }
        }
      }
    }
    Tally sampled;
    for (long i = 0; i < opt_.ore_random; ++i) {
      Rng rng = StreamRng(4, i);
      const int ns = UniformInt(rng, 1, 4);
      const int nt = UniformInt(rng, 1, 4);
      const GroundSets g(Ids('s', ns), Ids('t', nt));
      Bigraph h0(g);
      const int density = UniformInt(rng, 0, 2);
      for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < nt; ++t) {
          if (UniformInt(rng, 0, 3) < density) h0.AddEdge({s, t});
        }
      }
      std::vector<int> ms(ns, 0);
      std::vector<int> mt(nt, 0);
      if (UniformInt(rng, 0, 1) == 0) {
        for (const Edge& e : BipartiteComplement(h0).edges()) {
          if (UniformInt(rng, 0, 1) && ms[e.s] < 4 && mt[e.t] < 4) {
            ++ms[e.s];
            ++mt[e.t];
          }
        }
      } else {
        int total = 0;
        for (int& d : ms) total += d = UniformInt(rng, 0, 4);
        while (total > 4 * nt) {
          const int s = UniformInt(rng, 0, ns - 1);
          if (ms[s] > 0) --ms[s], --total;
        }
        for (int k = 0; k < total; ++k) {
          int t = UniformInt(rng, 0, nt - 1);
          while (mt[t] == 4) t = (t + 1) % nt;
          ++mt[t];
        }
      }
      OreCase(sampled, h0, ms, mt, Where("random Ore instance", i));
    }
    return {exhaustive.ok() && sampled.ok(),
            "exhaustive |S|,|T|<=" + std::to_string(side) + " (" +
                std::to_string(patterns) + " H0 up to relabeling): " +
                exhaustive.Summary("agree") + "; random up to 4x4: " +
                sampled.Summary("agree")};
  }

  std::pair<bool, std::string> Criterion5() {
    Tally agree;
    long feasible = 0;
    GeneratorLimits limits;
    limits.max_s = 4;
    limits.max_t = 4;
    limits.max_brualdi_edges = 12;
    limits.max_brualdi_rank = 3;
    for (long i = 0; i < opt_.brualdi_instances; ++i) {
      Rng rng = StreamRng(5, i);
      const InstanceFile file = RandomInstance(rng, Mode::kBrualdi, limits);
      const Instance& inst = file.instance;
      const Bigraph& gplus = inst.h0;
      const Matroid& ms = inst.matroid_s;
      const Matroid& mt = *inst.matroid_t;
      const int ell = *inst.target_rank;
      const std::string where = Where("brualdi instance", i);
      const CertContext ctx{&inst, &gplus};

      const CheckResult cover = CheckBrualdiCoverForm(gplus, ms, mt);
      const CheckResult neighbor = CheckBrualdiNeighborForm(gplus, ms, mt);
      RecordCert(certs_, cover, ctx, where);
      RecordCert(certs_, neighbor, ctx, where);
      const auto found = FindMatchingCoveringBases(gplus, ms, mt);
      if (found) {
        witnesses_.Record(ValidateMatching(*found, gplus.edges(), ms, mt, ell),
                          where);
      }
      const bool oracle = MatchingOracle(gplus.edges(), ms, mt, ell);
      feasible += oracle;
      agree.Record(cover.pass() == neighbor.pass() &&
                       neighbor.pass() == found.has_value() &&
                       found.has_value() == oracle,
                   where + ": forms/search/oracle disagree");
    }
    return {agree.ok(), agree.Summary("agree") + " (" +
                            std::to_string(feasible) + " with a matching)"};
  }

  std::pair<bool, std::string> Criterion6() {
    Tally fully;
    Tally empty_h0;
    Tally uniform;
    Tally prefix;
    GeneratorLimits limits;
    limits.max_s = 4;
    limits.max_t = 4;
    limits.max_degree = 3;

    for (long i = 0; i < opt_.lattice_instances; ++i) {
      Rng rng = StreamRng(6, i);
      const InstanceFile file = RandomInstance(rng, Mode::kFully, limits);
      const Instance& inst = file.instance;
      const std::string where = Where("fully instance", i);
      const CheckResult a = CheckFully(inst);
      const CheckResult b = CheckMsmt(inst);
      RecordCert(certs_, a, {&inst, nullptr}, where);
      RecordCert(certs_, b, {&inst, nullptr}, where);
      fully.Record(a.pass() == b.pass(), where + ": check_fully != check_msmt");
    }

    for (long i = 0; i < opt_.lattice_instances; ++i) {
      Rng rng = StreamRng(7, i);
      const InstanceFile file = RandomInstance(rng, Mode::kRyserGen, limits);
      const int ell = *file.instance.target_rank;

      Instance bare = file.instance;
      bare.h0 = Bigraph(bare.grounds());
      const std::string where = Where("empty-H0 matroid instance", i);
      const GroundSets& g = bare.grounds();
      const CheckResult gen = CheckRyserGen(bare);
      const CheckResult mat = CheckRyserMatroid(g, bare.degrees, bare.matroid_s,
                                                *bare.matroid_t, ell);
      const CheckResult integ = CheckIntegrated(g, bare.degrees, bare.matroid_s,
                                                *bare.matroid_t, ell);
      for (const CheckResult* r : {&gen, &mat, &integ}) {
        RecordCert(certs_, *r, {&bare, nullptr}, where);
      }
      empty_h0.Record(gen.pass() == mat.pass() && mat.pass() == integ.pass(),
                      where + ": ryser_gen / matroid / integrated disagree");
      RecordTermRank(file.instance, Where("term rank instance", i));

      const Instance u = UniformInstance(file.instance, ell);
      const std::string uw = Where("uniform instance", i);
      const CheckResult ug = CheckRyserGen(u);
      const CheckResult un = CheckRyserNovel(u.h0, u.degrees, ell);
      RecordCert(certs_, ug, {&u, nullptr}, uw);
      RecordCert(certs_, un, {&u, nullptr}, uw);
      uniform.Record(ug.pass() == un.pass(),
                     uw + ": uniform ryser_gen != novel form");
    }

    for (long i = 0; i < opt_.lattice_instances; ++i) {
      Rng rng = StreamRng(8, i);
      const InstanceFile file = RandomInstance(rng, Mode::kRyser, limits);
      const int ell = *file.instance.target_rank;
      const Instance u = UniformInstance(file.instance, ell);
      const std::string where = Where("classic Ryser instance", i);
      const CheckResult ug = CheckRyserGen(u);
      const CheckResult un = CheckRyserNovel(u.h0, u.degrees, ell);
      const CheckResult classic = CheckRyser(u.grounds(), u.degrees, ell);
      for (const CheckResult* r : {&ug, &un, &classic}) {
        RecordCert(certs_, *r, {&u, nullptr}, where);
      }
      uniform.Record(ug.pass() == un.pass() && un.pass() == classic.pass(),
                     where + ": uniform ryser_gen / novel / classic disagree");
      RecordTermRank(u, where);
    }

    // Prefix reduction: every degree specification up to 6x6 up to
    // relabeling, fed in a shuffled order, and random unsorted ones.
    long prefix_specs = 0;
    auto prefix_case = [&](const std::vector<int>& ms,
                           const std::vector<int>& mt, const std::string& where) {
      const int ns = static_cast<int>(ms.size());
      const int nt = static_cast<int>(mt.size());
      const GroundSets g(Ids('s', ns), Ids('t', nt));
      const DegreeSpec spec = DegreeSpec::Full(g, ms, mt);
      if (!OreCompletePasses(spec, ns, nt)) return;
      ++prefix_specs;
      const long full = RyserFullExcess(spec, ns, nt);
      for (int ell = 0; ell <= nt; ++ell) {
        const CheckResult r = CheckRyserPrefix(g, spec, ell);
        prefix.Record(r.max_excess == full + ell && r.pass() == (full + ell <= 0),
                      where + ", l=" + std::to_string(ell) + ": prefix " +
                          std::to_string(r.max_excess) + " vs full " +
                          std::to_string(full + ell));
      }
    };
    long sweep = 0;
    for (int ns = 1; ns <= opt_.ryser_prefix_side; ++ns) {
      for (int nt = 1; nt <= opt_.ryser_prefix_side; ++nt) {
        const auto s_vectors = SortedVectorsBySum(ns, nt);
        const auto t_vectors = SortedVectorsBySum(nt, ns);
        for (const auto& [sum, s_list] : s_vectors) {
          auto it = t_vectors.find(sum);
          if (it == t_vectors.end()) continue;
          for (std::vector<int> ms : s_list) {
            for (std::vector<int> mt : it->second) {
              Rng rng = StreamRng(10, sweep++);
              std::shuffle(ms.begin(), ms.end(), rng);
              std::shuffle(mt.begin(), mt.end(), rng);
              prefix_case(ms, mt, Where("prefix sweep case", sweep));
            }
          }
        }
      }
    }
    for (long i = 0; i < opt_.ryser_prefix_random; ++i) {
      Rng rng = StreamRng(9, i);
      const int ns = UniformInt(rng, 1, 6);
      const int nt = UniformInt(rng, 1, 6);
      std::vector<int> ms(ns, 0);
      std::vector<int> mt(nt, 0);
      const int keep = UniformInt(rng, 1, 4);
      for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < nt; ++t) {
          if (UniformInt(rng, 0, 4) < keep) ++ms[s], ++mt[t];
        }
      }
      prefix_case(ms, mt, Where("random prefix case", i));
    }

    const bool ok = fully.ok() && empty_h0.ok() && uniform.ok() && prefix.ok();
    return {ok, "fully = msmt: " + fully.Summary("agree") +
                    "; empty H0 gen = matroid = integrated: " +
                    empty_h0.Summary("agree") +
                    "; uniform gen = novel (= classic): " +
                    uniform.Summary("agree") + "; prefix = full (" +
                    std::to_string(prefix_specs) + " realizable specs): " +
                    prefix.Summary("agree")};
  }

  void RecordTermRank(const Instance& inst, const std::string& where) {
    auto solved = SolveTermRank(inst, Route::kCover);
    const auto* s = std::get_if<TermRankSolution>(&solved);
    if (!s) {
      certs_.Record(ValidateCert(std::get<ViolationCert>(solved), {&inst, nullptr}),
                    where);
      return;
    }
    Instance reduced = inst;
    reduced.demand_t = SetFunction::Corank(*inst.matroid_t);
    const std::vector<Edge> edges = s->graph.edges();
    witnesses_.Record(ValidateAugmentation(edges, reduced), where);
    std::vector<Edge> plus = edges;
    for (const Edge& e : inst.h0.edges()) plus.push_back(e);
    witnesses_.Record(ValidateMatching(s->matching, plus, inst.matroid_s,
                                       *inst.matroid_t, *inst.target_rank),
                      where);
  }

  AcceptanceOptions opt_;
  Tally witnesses_;
  Tally certs_;
  CriterionResult c2_{2, "arc-cover min-max", false, "not run", 0};
  CriterionResult c3_{3, "supermodularity of p0 and p1", false, "not run", 0};
};

}  // namespace

std::vector<CriterionResult> RunAcceptanceSuite(const AcceptanceOptions& options) {
  return Suite(options).Run();
}

void PrintAcceptance(const std::vector<CriterionResult>& results,
                     std::ostream& out) {
  for (const CriterionResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": "
        << r.detail << "\n";
  }
}

}  // namespace termrank
