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

#include <limits>

#include <gtest/gtest.h>

#include "oracles.h"
#include "termrank/commands.h"
#include "termrank/error.h"
#include "termrank/harness.h"
#include "test_util.h"

namespace termrank {
namespace {

using testing::ParseInstanceText;

GroundSets Grounds(int s, int t) {
  std::vector<std::string> a, b;
  for (int i = 1; i <= s; ++i) a.push_back("s" + std::to_string(i));
  for (int i = 1; i <= t; ++i) b.push_back("t" + std::to_string(i));
  return GroundSets(a, b);
}

std::vector<InstanceFile> RandomFiles(Mode mode, int count, std::uint64_t seed,
                                      int side = 3) {
  GeneratorLimits limits;
  limits.max_s = side;
  limits.max_t = side;
  std::vector<InstanceFile> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = InstanceRng(seed, i);
    out.push_back(RandomInstance(rng, mode, limits));
  }
  return out;
}

void ExpectCertConsistent(const CheckResult& r) {
  if (!r.cert) {
    EXPECT_LE(r.max_excess, 0);
    return;
  }
  EXPECT_EQ(r.cert->lhs - r.cert->rhs, r.max_excess);
  EXPECT_GT(r.max_excess, 0);
  Mask seen = r.cert->y;
  for (Mask p : r.cert->parts) {
    EXPECT_NE(p, 0u);
    EXPECT_EQ(p & seen, 0u);
    seen |= p;
  }
}

TEST(OreTest, Examples) {
  const GroundSets g = Grounds(2, 2);
  const Bigraph k22 = Bigraph::Complete(g);
  EXPECT_TRUE(CheckOre(k22, DegreeSpec::Full(g, {1, 1}, {1, 1})).pass());
  EXPECT_TRUE(CheckOre(k22, DegreeSpec::Zero(g)).pass());

  const CheckResult r = CheckOre(k22, DegreeSpec::Full(g, {2, 2}, {3, 1}));
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.cert->which, Condition::kOre);
  EXPECT_EQ(r.cert->x, 0b11u);
  EXPECT_EQ(r.cert->y, 0b01u);
  EXPECT_EQ(r.cert->lhs, 5);
  EXPECT_EQ(r.cert->rhs, 4);
  EXPECT_EQ(r.max_excess, 1);
  EXPECT_EQ(r.evaluated, 16u);
}

TEST(OreTest, AgreesWithSubgraphEnumeration) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kOre, 400, 21)) {
    const Instance inst = PlainInstance(f.instance);
    const bool exists = oracle::AugmentationExists(inst);
    const CheckResult r = CheckOre(BipartiteComplement(inst.h0), inst.degrees);
    EXPECT_EQ(r.pass(), exists);
    ExpectCertConsistent(r);
    feasible += exists;
  }
  EXPECT_GT(feasible, 40);
  EXPECT_LT(feasible, 360);
}

TEST(MsmtTest, ZeroDemandReducesToOre) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 300, 22)) {
    Instance inst = f.instance;
    inst.demand_t = SetFunction::Zero(inst.grounds().t_ids());
    EXPECT_EQ(CheckMsmt(inst).pass(),
              CheckOre(BipartiteComplement(inst.h0), inst.degrees).pass());
  }
}

TEST(MsmtTest, AgreesWithAugmentationEnumeration) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 500, 23)) {
    const CheckResult r = CheckMsmt(f.instance);
    const bool exists = oracle::AugmentationExists(f.instance);
    EXPECT_EQ(r.pass(), exists) << InstanceToJson(f).dump();
    ExpectCertConsistent(r);
    feasible += exists;
  }
  EXPECT_GT(feasible, 50);
  EXPECT_LT(feasible, 450);
}

TEST(MsmtTest, UniformCorankMatchesRyser) {
  Rng rng(24);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int ns = UniformInt(rng, 1, 3);
    const int nt = UniformInt(rng, 1, 3);
    const GroundSets g = Grounds(ns, nt);
    std::vector<int> ms(ns), mt(nt);
    for (int& d : ms) d = UniformInt(rng, 0, nt);
    int total = 0;
    for (int d : ms) total += d;
    for (int i = 0; i < nt; ++i) mt[i] = 0;
    for (int k = 0; k < total; ++k) ++mt[UniformInt(rng, 0, nt - 1)];
    const DegreeSpec m = DegreeSpec::Full(g, ms, mt);
    if (!CheckOre(Bigraph::Complete(g), m).pass()) continue;
    const int ell = UniformInt(rng, 0, std::min(ns, nt));
    const Matroid u_s = Matroid::Uniform(g.s_ids(), ell);
    const Matroid u_t = Matroid::Uniform(g.t_ids(), ell);
    const Instance inst{Bigraph(g), m, u_s, SetFunction::Corank(u_t),
                        std::nullopt, std::nullopt};
    EXPECT_EQ(CheckMsmt(inst).pass(), CheckRyser(g, m, ell).pass());
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(MsmtTest, PlantedInstancesPass) {
  Rng rng(25);
  int planted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const GroundSets g = Grounds(UniformInt(rng, 1, 4), UniformInt(rng, 1, 4));
    Bigraph h0(g), added(g);
    for (int s = 0; s < g.s_size(); ++s) {
      for (int t = 0; t < g.t_size(); ++t) {
        const int roll = UniformInt(rng, 0, 2);
        if (roll == 0) h0.AddEdge({s, t});
        if (roll == 1) added.AddEdge({s, t});
      }
    }
    std::vector<int> ms(g.s_size()), mt(g.t_size());
    for (int s = 0; s < g.s_size(); ++s) ms[s] = added.s_degree(s);
    for (int t = 0; t < g.t_size(); ++t) mt[t] = added.t_degree(t);
    const Matroid m_s = RandomMatroid(rng, g.s_ids());
    const Matroid m_t = RandomMatroid(rng, g.t_ids());
    const SetFunction p_t = SetFunction::Corank(m_t);
    if (!MatroidCovers(Union(h0, added), m_s, p_t)) continue;
    ++planted;
    const Instance inst{h0, DegreeSpec::Full(g, ms, mt), m_s, p_t,
                        std::nullopt, std::nullopt};
    EXPECT_TRUE(CheckMsmt(inst).pass());
  }
  EXPECT_GT(planted, 30);
}

TEST(MsmtTest, RejectsNonSupermodularDemand) {
  EXPECT_THROW(CheckMsmt(ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1"], "T": ["a", "b", "c"],
    "m_S": {"s1": 0}, "m_T": {"a": 0, "b": 0, "c": 0},
    "p_T": {"ground": ["a", "b", "c"],
            "values": {"a,b": 1, "b,c": 1, "a,b,c": 1}}})")),
               Error);
}

TEST(MsmtTest, EmptySetDemandIsReported) {
  const CheckResult r = CheckMsmt(ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1"], "T": ["t1"],
    "m_S": {"s1": 0}, "m_T": {"t1": 0},
    "p_T": {"ground": ["t1"], "values": {"": 1, "t1": 1}}})"));
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.cert->which, Condition::kEmptySetDemand);
  EXPECT_EQ(r.cert->lhs, 1);
}

TEST(MsOnlyTest, Examples) {
  EXPECT_TRUE(CheckMsOnly(ParseInstanceText(R"({
    "mode": "ms_only", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "m_S": {"s1": 0, "s2": 0},
    "p_T": {"ground": ["t1", "t2"], "values": {"t1": -1, "t1,t2": 0}}})"))
                  .pass());
  // m_S(s) = |T| - d_H0(s) everywhere.
  EXPECT_TRUE(CheckMsOnly(ParseInstanceText(R"({
    "mode": "ms_only", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "h0": [["s1", "t1"]], "m_S": {"s1": 1, "s2": 2}})"))
                  .pass());
  const CheckResult over = CheckMsOnly(ParseInstanceText(R"({
    "mode": "ms_only", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "h0": [["s1", "t1"]], "m_S": {"s1": 2, "s2": 0}})"));
  ASSERT_FALSE(over.pass());
  EXPECT_EQ(over.cert->which, Condition::kMsDegreeBound);
}

TEST(MsOnlyTest, AgreesWithAugmentationEnumeration) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsOnly, 400, 26)) {
    const CheckResult r = CheckMsOnly(f.instance);
    const bool exists = oracle::AugmentationExists(f.instance);
    EXPECT_EQ(r.pass(), exists) << InstanceToJson(f).dump();
    feasible += exists;
  }
  EXPECT_GT(feasible, 40);
}

TEST(FullyTest, AgreesWithMsmt) {
  for (const InstanceFile& f : RandomFiles(Mode::kFully, 400, 27)) {
    const CheckResult fully = CheckFully(f.instance);
    EXPECT_EQ(fully.pass(), CheckMsmt(f.instance).pass());
    ExpectCertConsistent(fully);
  }
}

TEST(CsakTest, AgreesWithMsmtOnEmptyH0) {
  for (const InstanceFile& f : RandomFiles(Mode::kFully, 300, 28)) {
    Instance inst = f.instance;
    inst.h0 = Bigraph(inst.grounds());
    const bool msmt = CheckMsmt(inst).pass();
    EXPECT_EQ(CheckCsakMatroid(inst, false).pass(), msmt);
    Rng rng = InstanceRng(280, inst.degrees.total());
    inst.demand_t =
        SetFunction::Corank(RandomMatroid(rng, inst.grounds().t_ids()));
    EXPECT_EQ(CheckCsakMatroid(inst, true).pass(), CheckMsmt(inst).pass());
  }
}

TEST(CsakTest, NeedsEmptyH0) {
  Instance inst = ParseInstanceText(R"({
    "mode": "fully", "S": ["s1"], "T": ["t1"], "h0": [["s1", "t1"]],
    "m_S": {"s1": 0}, "m_T": {"t1": 0}})");
  EXPECT_THROW(CheckCsakMatroid(inst, false), Error);
}

TEST(RyserTest, Examples) {
  const GroundSets g = Grounds(3, 3);
  EXPECT_TRUE(CheckRyser(g, DegreeSpec::Full(g, {2, 1, 1}, {2, 1, 1}), 3).pass());
  const CheckResult r = CheckRyser(g, DegreeSpec::Full(g, {2, 2, 0}, {2, 2, 0}), 3);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.cert->which, Condition::kRyser);
  EXPECT_EQ(r.cert->x, 0b011u);
  EXPECT_EQ(r.cert->y, 0u);
  EXPECT_EQ(r.cert->lhs, 5);
  EXPECT_EQ(r.cert->rhs, 4);
}

TEST(RyserTest, WitnessForFeasibleExample) {
  const GroundSets g = Grounds(3, 3);
  const Bigraph w(g, std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}, {2, 2}});
  EXPECT_TRUE(Fits(w, DegreeSpec::Full(g, {2, 1, 1}, {2, 1, 1})));
  EXPECT_EQ(MatchingNumber(w), 3);
  EXPECT_EQ(oracle::MatchingNumber(w.edges()), 3);
}

TEST(RyserTest, ZeroTargetAlwaysPassesAndPrefixAgrees) {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const GroundSets g = Grounds(UniformInt(rng, 1, 4), UniformInt(rng, 1, 4));
    Bigraph planted(g);
    for (int s = 0; s < g.s_size(); ++s) {
      for (int t = 0; t < g.t_size(); ++t) {
        if (UniformInt(rng, 0, 1)) planted.AddEdge({s, t});
      }
    }
    std::vector<int> ms(g.s_size()), mt(g.t_size());
    for (int s = 0; s < g.s_size(); ++s) ms[s] = planted.s_degree(s);
    for (int t = 0; t < g.t_size(); ++t) mt[t] = planted.t_degree(t);
    const DegreeSpec m = DegreeSpec::Full(g, ms, mt);
    EXPECT_TRUE(CheckRyser(g, m, 0).pass());
    const int ell = UniformInt(rng, 0, g.t_size());
    EXPECT_EQ(CheckRyser(g, m, ell).pass(), CheckRyserPrefix(g, m, ell).pass());
    if (ell <= MatchingNumber(planted)) {
      EXPECT_TRUE(CheckRyser(g, m, ell).pass());
    }
  }
}

TEST(RyserTest, PreconditionOnDegrees) {
  const GroundSets g = Grounds(2, 2);
  EXPECT_THROW(CheckRyser(g, DegreeSpec::Full(g, {2, 2}, {3, 1}), 1), Error);
  EXPECT_THROW(CheckRyser(g, DegreeSpec::Zero(g), 3), Error);
}

TEST(BrualdiTest, Examples) {
  const GroundSets g = Grounds(2, 2);
  const Matroid u_s = Matroid::Uniform(g.s_ids(), 1);
  const Matroid u_t = Matroid::Uniform(g.t_ids(), 1);
  EXPECT_TRUE(CheckBrualdi(Bigraph::Complete(g), u_s, u_t).pass());
  const CheckResult r = CheckBrualdi(Bigraph(g), u_s, u_t);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.cert->which, Condition::kBrualdiCover);
  EXPECT_EQ(r.cert->x_prime, Mask{0});
  EXPECT_EQ(r.cert->y_prime, Mask{0});
  EXPECT_EQ(r.cert->lhs, 1);
}

TEST(BrualdiTest, AgreesWithMatchingEnumeration) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kBrualdi, 400, 30)) {
    const Instance& inst = f.instance;
    const bool exists = oracle::MatchingCoveringBasesExists(
        inst.h0, inst.matroid_s, *inst.matroid_t);
    EXPECT_EQ(CheckBrualdi(inst.h0, inst.matroid_s, *inst.matroid_t).pass(),
              exists)
        << InstanceToJson(f).dump();
    feasible += exists;
  }
  EXPECT_GT(feasible, 40);
  EXPECT_LT(feasible, 360);
}

TEST(RyserGenTest, ZeroDegreesReduceToBrualdi) {
  for (const InstanceFile& f : RandomFiles(Mode::kRyserGen, 300, 31)) {
    Instance inst = f.instance;
    inst.degrees = DegreeSpec::Zero(inst.grounds());
    EXPECT_EQ(CheckRyserGen(inst).pass(),
              CheckBrualdi(inst.h0, inst.matroid_s, *inst.matroid_t).pass());
  }
}

TEST(RyserGenTest, EmptyH0MatchesMatroidForm) {
  int compared = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kRyserGen, 400, 32)) {
    Instance inst = f.instance;
    inst.h0 = Bigraph(inst.grounds());
    if (!CheckOre(Bigraph::Complete(inst.grounds()), inst.degrees).pass()) continue;
    ++compared;
    EXPECT_EQ(CheckRyserGen(inst).pass(),
              CheckRyserMatroid(inst.grounds(), inst.degrees, inst.matroid_s,
                                *inst.matroid_t, *inst.target_rank)
                  .pass());
  }
  EXPECT_GT(compared, 50);
}

TEST(RyserGenTest, UniformMatroidsMatchNovelForm) {
  for (const InstanceFile& f : RandomFiles(Mode::kRyserGen, 300, 33)) {
    Instance inst = f.instance;
    const int ell = *inst.target_rank;
    inst.matroid_s = Matroid::Uniform(inst.grounds().s_ids(), ell);
    inst.matroid_t = Matroid::Uniform(inst.grounds().t_ids(), ell);
    inst.demand_t = SetFunction::Corank(*inst.matroid_t);
    EXPECT_EQ(CheckRyserGen(inst).pass(),
              CheckRyserNovel(inst.h0, inst.degrees, ell).pass());
  }
}

TEST(RyserGenTest, RankHypothesis) {
  Instance inst = ParseInstanceText(R"({
    "mode": "ryser_gen", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "m_S": {"s1": 0, "s2": 0}, "m_T": {"t1": 0, "t2": 0},
    "M_S": {"kind": "uniform", "k": 1}, "M_T": {"kind": "uniform", "k": 1}})");
  inst.target_rank = 2;
  try {
    CheckRyserGen(inst);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankHypothesis);
  }
  inst.matroid_t = Matroid::Uniform(inst.grounds().t_ids(), 2);
  inst.target_rank = 1;
  try {
    CheckRyserGen(inst);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankMismatch);
  }
}

TEST(IntegratedTest, ZeroRankReducesToOre) {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSets g = Grounds(UniformInt(rng, 1, 3), UniformInt(rng, 1, 3));
    std::vector<int> ms(g.s_size()), mt(g.t_size(), 0);
    int total = 0;
    for (int& d : ms) total += (d = UniformInt(rng, 0, 3));
    for (int k = 0; k < total; ++k) ++mt[UniformInt(rng, 0, g.t_size() - 1)];
    const DegreeSpec m = DegreeSpec::Full(g, ms, mt);
    const Matroid z_s = Matroid::Uniform(g.s_ids(), 0);
    const Matroid z_t = Matroid::Uniform(g.t_ids(), 0);
    EXPECT_EQ(CheckIntegrated(g, m, z_s, z_t, 0).pass(),
              CheckOre(Bigraph::Complete(g), m).pass());
  }
}

TEST(IntegratedTest, FreeSquareMatchesRyser) {
  Rng rng(35);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 3);
    const GroundSets g = Grounds(n, n);
    std::vector<int> ms(n), mt(n, 0);
    int total = 0;
    for (int& d : ms) total += (d = UniformInt(rng, 0, n));
    for (int k = 0; k < total; ++k) ++mt[UniformInt(rng, 0, n - 1)];
    const DegreeSpec m = DegreeSpec::Full(g, ms, mt);
    if (!CheckOre(Bigraph::Complete(g), m).pass()) continue;
    ++compared;
    EXPECT_EQ(CheckIntegrated(g, m, Matroid::Free(g.s_ids()),
                              Matroid::Free(g.t_ids()), n)
                  .pass(),
              CheckRyser(g, m, n).pass());
  }
  EXPECT_GT(compared, 50);
}

TEST(SubpartitionTest, Counts) {
  for (int n = 0; n <= 5; ++n) {
    long count = 0;
    ForEachSubpartition(FullMask(n), [&](std::span<const Mask> parts) {
      ++count;
      Mask seen = 0;
      for (Mask p : parts) {
        EXPECT_NE(p, 0u);
        EXPECT_EQ(p & seen, 0u);
        seen |= p;
      }
    });
    EXPECT_EQ(count, oracle::CountSubpartitions(n));
  }
  long three = 0, four = 0;
  ForEachSubpartition(0b111, [&](std::span<const Mask>) { ++three; });
  ForEachSubpartition(0b1111, [&](std::span<const Mask>) { ++four; });
  EXPECT_EQ(three, 15);
  EXPECT_EQ(four, 52);
}

TEST(SubpartitionTest, MsmtExcessMatchesRecursiveOracle) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 200, 36)) {
    const Instance& inst = f.instance;
    const GroundSets& g = inst.grounds();
    const DegreeSpec& m = inst.degrees;
    const Bigraph g0 = BipartiteComplement(inst.h0);
    long best = std::numeric_limits<long>::min();
    for (Mask x = 0; x <= g.full_s(); ++x) {
      for (Mask y = 0; y <= g.full_t(); ++y) {
        const long sub =
            oracle::SubpartitionMax(g.full_t() & ~y, [&](Mask part) {
              return static_cast<long>(inst.demand_t(part)) -
                     inst.matroid_s.rank(x | Neighborhood(inst.h0, part));
            });
        best = std::max<long>(
            best, m.SumS(x) + m.SumT(y) - CutCount(g0, x, y) + sub - m.total());
      }
    }
    EXPECT_EQ(CheckMsmt(inst).max_excess, best);
  }
}

}  // namespace
}  // namespace termrank
