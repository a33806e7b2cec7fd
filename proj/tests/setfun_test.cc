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

#include "termrank/setfun.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "termrank/feasibility.h"
#include "termrank/harness.h"
#include "test_util.h"

namespace termrank {
namespace {

using testing::ParseInstanceText;

// H0 empty on (2,2), M_S free, p_T the co-rank of uniform(1), m = 1.
Instance SmallInstance() {
  return ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "m_S": {"s1": 1, "s2": 1}, "m_T": {"t1": 1, "t2": 1},
    "p_T": {"corank": {"kind": "uniform", "k": 1}}})");
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

TEST(ClassifyTest, CorankIsFullySupermodular) {
  const std::vector<std::string> ids = {"a", "b", "c", "d"};
  for (const Matroid& m :
       {Matroid::Free(ids), Matroid::Uniform(ids, 2),
        Matroid::Partition(ids, {0b0011, 0b1100}, {1, 2})}) {
    EXPECT_FALSE(ClassifySupermodular(SetFunction::Corank(m),
                                      SupermodularMode::kFull, false));
  }
}

TEST(ClassifyTest, ZeroPassesEveryMode) {
  const GroundSets g({"s1", "s2"}, {"t1", "t2"});
  const SetFunction zero = SetFunction::Zero(g.v_ids());
  for (auto mode : {SupermodularMode::kFull, SupermodularMode::kIntersecting,
                    SupermodularMode::kTIntersecting,
                    SupermodularMode::kSTCrossing}) {
    EXPECT_FALSE(ClassifyOnV(zero, g, mode, false));
    EXPECT_FALSE(ClassifyOnV(zero, g, mode, true));
  }
}

TEST(ClassifyTest, ReportsViolatingPair) {
  // p({a}) = p({b}) = 1, p({a,b}) = 1: 2 > 1 + 0.
  const SetFunction p({"a", "b"}, {0, 1, 1, 1});
  const auto v = ClassifySupermodular(p, SupermodularMode::kFull, false);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->pair_sum, 2);
  EXPECT_EQ(v->meet_join_sum, 1);
  // Disjoint sets are exempt from the intersecting form.
  EXPECT_FALSE(ClassifySupermodular(p, SupermodularMode::kIntersecting, false));
}

TEST(P0Test, DirectEvaluationExamples) {
  const Instance inst = SmallInstance();
  const GroundSets& g = inst.grounds();
  const SetFunction p0 =
      BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
  EXPECT_EQ(p0(g.Join(0, 0b01)), 1);
  EXPECT_EQ(p0(g.Join(0b01, 0b01)), 0);
  for (Mask x = 0; x <= g.full_s(); ++x) EXPECT_EQ(p0(g.Join(x, 0)), 0);
}

TEST(P0Test, MatchesFormulaAndIsPositivelyTIntersecting) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 300, 11)) {
    const Instance& inst = f.instance;
    const GroundSets& g = inst.grounds();
    const SetFunction p0 =
        BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
    for (Mask v = 0; v <= g.full_v(); ++v) {
      ASSERT_EQ(p0(v), oracle::P0At(inst.h0, inst.degrees, inst.demand_t,
                                    inst.matroid_s, v));
    }
    EXPECT_FALSE(
        ClassifyOnV(p0, g, SupermodularMode::kTIntersecting, /*positively=*/true));
  }
}

TEST(P1Test, Examples) {
  const Instance inst = SmallInstance();
  const GroundSets& g = inst.grounds();
  EXPECT_EQ(VsSet(inst.h0, 0), g.Join(0b10, 0b11));
  const SetFunction p0 =
      BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
  const SetFunction p1 = BuildP1(p0, inst.h0, inst.degrees);
  EXPECT_EQ(p1(VsSet(inst.h0, 0)), inst.degrees.s_degrees()[0]);
  EXPECT_EQ(p1(g.Join(0, 0b01)), 1);
  EXPECT_EQ(p1(g.Join(0, 0b01)), p0(g.Join(0, 0b01)));
}

TEST(P1Test, PropertiesOnFeasibleInstances) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 400, 12)) {
    const Instance& inst = f.instance;
    if (!CheckMsmt(inst).pass()) continue;
    ++feasible;
    const GroundSets& g = inst.grounds();
    const SetFunction p0 =
        BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
    const SetFunction p1 = BuildP1(p0, inst.h0, inst.degrees);
    const ClosedFamily family(inst.h0);
    const Bigraph g0 = BipartiteComplement(inst.h0);
    for (int s = 0; s < g.s_size(); ++s) {
      EXPECT_GE(p1(VsSet(inst.h0, s)), p0(VsSet(inst.h0, s)));
      EXPECT_LE(inst.degrees.s_degrees()[s], g0.s_degree(s));
    }
    for (Mask v = 0; v <= g.full_v(); ++v) {
      if (p1(v) <= 0) continue;
      EXPECT_TRUE(family.Contains(v));
      bool entered = false;
      for (const Edge& e : g0.edges()) {
        entered |= !Contains(v, e.s) && Contains(v, g.s_size() + e.t);
      }
      EXPECT_TRUE(entered) << "mask " << v;
    }
    EXPECT_FALSE(ClassifyOnV(p1, g, SupermodularMode::kSTCrossing, true));
  }
  EXPECT_GT(feasible, 50);
}

TEST(P0SOnlyTest, Examples) {
  const Instance inst = ParseInstanceText(R"({
    "mode": "ms_only", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "h0": [["s1", "t1"]], "m_S": {"s1": 1, "s2": 0},
    "p_T": {"ground": ["t1", "t2"], "values": {"t1": 1, "t2": 2, "t1,t2": 3}}})");
  const GroundSets& g = inst.grounds();
  const SetFunction p = BuildP0SOnly(inst.h0, inst.demand_t, inst.matroid_s);
  // {t1} is entered by s1 t1 in H0.
  EXPECT_EQ(p(g.Join(0, 0b01)), 0);
  EXPECT_EQ(p(g.Join(0, 0b10)), 2);
  EXPECT_EQ(p(g.Join(0b01, 0b11)), 2);
  for (Mask v = 0; v <= g.full_v(); ++v) {
    EXPECT_EQ(p(v), oracle::P0SOnlyAt(inst.h0, inst.demand_t, inst.matroid_s, v));
  }
}

TEST(P0SOnlyTest, EmptyH0FreeMatroidGivesDemand) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsOnly, 100, 13)) {
    Instance inst = f.instance;
    inst.h0 = Bigraph(inst.grounds());
    inst.matroid_s = Matroid::Free(inst.grounds().s_ids());
    const GroundSets& g = inst.grounds();
    const SetFunction p = BuildP0SOnly(inst.h0, inst.demand_t, inst.matroid_s);
    for (Mask y = 0; y <= g.full_t(); ++y) {
      EXPECT_EQ(p(g.Join(0, y)), inst.demand_t(y));
    }
  }
}

TEST(ClosedFamilyTest, MatchesDefinition) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 100, 14)) {
    const ClosedFamily family(f.instance.h0);
    for (Mask v = 0; v <= f.instance.grounds().full_v(); ++v) {
      EXPECT_EQ(family.Contains(v), oracle::InClosedFamily(f.instance.h0, v));
    }
  }
}

TEST(StIndependentTest, Examples) {
  const Instance inst = SmallInstance();
  const GroundSets& g = inst.grounds();
  std::vector<Mask> vs;
  for (int s = 0; s < g.s_size(); ++s) vs.push_back(VsSet(inst.h0, s));
  EXPECT_TRUE(StIndependent(vs, g));
  const std::vector<Mask> one = {g.Join(0, 0b11)};
  EXPECT_TRUE(StIndependent(one, g));
  const std::vector<Mask> nested = {g.Join(0, 0b01), g.Join(0, 0b11)};
  EXPECT_FALSE(StIndependent(nested, g));
}

TEST(StIndependentTest, VsFamiliesOnRandomGraphs) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 100, 15, 4)) {
    std::vector<Mask> vs;
    for (int s = 0; s < f.instance.grounds().s_size(); ++s) {
      vs.push_back(VsSet(f.instance.h0, s));
    }
    EXPECT_TRUE(StIndependent(vs, f.instance.grounds()));
  }
}

TEST(SetFunctionTest, ShiftDeleteAndPositivePart) {
  const SetFunction p({"a", "b"}, {-1, 2, 0, 3});
  EXPECT_EQ(p.Shifted(1).values(), (std::vector<int>{0, 3, 1, 4}));
  EXPECT_EQ(p.PositivePart().values(), (std::vector<int>{0, 2, 0, 3}));
  const SetFunction d = p.DeleteElement(0);
  EXPECT_EQ(d.ground(), (std::vector<std::string>{"b"}));
  EXPECT_EQ(d.values(), (std::vector<int>{-1, 0}));
}

}  // namespace
}  // namespace termrank
