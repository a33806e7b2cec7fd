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

#include <variant>

#include <gtest/gtest.h>

#include "oracles.h"
#include "termrank/harness.h"
#include "test_util.h"

namespace termrank {
namespace {

using testing::ParseInstanceText;

std::vector<InstanceFile> RandomFiles(Mode mode, int count, std::uint64_t seed,
                                      int side = 3, int max_degree = 3) {
  GeneratorLimits limits;
  limits.max_s = side;
  limits.max_t = side;
  limits.max_degree = max_degree;
  std::vector<InstanceFile> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = InstanceRng(seed, i);
    out.push_back(RandomInstance(rng, mode, limits));
  }
  return out;
}

void ExpectAugmentation(const Instance& inst, const Bigraph& g) {
  EXPECT_TRUE(g.simple());
  EXPECT_TRUE(Fits(g, inst.degrees));
  for (const Edge& e : g.edges()) EXPECT_EQ(inst.h0.multiplicity(e.s, e.t), 0);
  EXPECT_TRUE(MatroidCovers(Union(inst.h0, g), inst.matroid_s, inst.demand_t));
}

TEST(MinArcCoverTest, SinglePositiveSet) {
  const GroundSets g({"s1", "s2"}, {"t1", "t2"});
  std::vector<int> values(std::size_t{1} << g.v_size(), 0);
  const Mask v = g.Join(0b01, 0b01);
  values[v] = 1;
  const ArcCoverResult r = MinArcCover(SetFunction(g.v_ids(), values), g);
  ASSERT_EQ(r.arcs.size(), 1u);
  EXPECT_EQ(r.arcs[0], (Edge{1, 0}));
  EXPECT_EQ(r.dual.sets, std::vector<Mask>{v});
  EXPECT_EQ(r.dual.value, 1);
  EXPECT_TRUE(r.min_max_holds());
}

TEST(MinArcCoverTest, NonPositiveDemand) {
  const GroundSets g({"s1", "s2"}, {"t1"});
  std::vector<int> values(std::size_t{1} << g.v_size(), -1);
  values[0] = 0;
  const ArcCoverResult r = MinArcCover(SetFunction(g.v_ids(), values), g);
  EXPECT_TRUE(r.arcs.empty());
  EXPECT_EQ(r.dual.value, 0);
}

TEST(MinArcCoverTest, UnreachableSetIsRejected) {
  // Every S node lies inside V, so no ST-arc can enter it.
  const GroundSets g({"s1"}, {"t1"});
  std::vector<int> values(std::size_t{1} << g.v_size(), 0);
  values[g.full_v()] = 1;
  EXPECT_THROW(MinArcCover(SetFunction(g.v_ids(), values), g), Error);
}

TEST(MinArcCoverTest, P1CoverHasSizeGamma) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 300, 41)) {
    const Instance& inst = f.instance;
    if (!CheckMsmt(inst).pass()) continue;
    ++feasible;
    const SetFunction p1 = BuildP1(
        BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s), inst.h0,
        inst.degrees);
    const ArcCoverResult r = MinArcCover(p1, inst.grounds());
    EXPECT_EQ(static_cast<long>(r.arcs.size()), inst.degrees.total());
    EXPECT_TRUE(r.min_max_holds());
    EXPECT_TRUE(CoversDemand(inst.grounds(), r.arcs, p1));
    EXPECT_TRUE(StIndependent(r.dual.sets, inst.grounds()));
  }
  EXPECT_GT(feasible, 40);
}

TEST(MinArcCoverTest, MatchesBruteForceOnSmallGrounds) {
  int compared = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 300, 42, 2, 2)) {
    const Instance& inst = f.instance;
    const SetFunction p1 = BuildP1(
        BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s), inst.h0,
        inst.degrees);
    ArcCoverResult r;
    try {
      r = MinArcCover(p1, inst.grounds());
    } catch (const Error&) {
      continue;
    }
    ++compared;
    const long brute =
        oracle::MinCoverBrute(p1, inst.grounds(), inst.degrees.total() + 1);
    EXPECT_EQ(static_cast<long>(r.arcs.size()), brute)
        << InstanceToJson(f).dump();
    EXPECT_EQ(r.dual.value, brute);
  }
  EXPECT_GT(compared, 50);
}

TEST(CoverHelpersTest, MinimalizeDropsRedundantArcs) {
  const GroundSets g({"s1", "s2"}, {"t1"});
  std::vector<int> values(std::size_t{1} << g.v_size(), 0);
  values[g.Join(0, 1)] = 1;
  const SetFunction p(g.v_ids(), values);
  const std::vector<Edge> arcs = {{0, 0}, {1, 0}};
  EXPECT_TRUE(CoversDemand(g, arcs, p));
  EXPECT_EQ(MinimalizeCover(g, arcs, p), (std::vector<Edge>{{0, 0}}));
  EXPECT_FALSE(CoversDemand(g, std::vector<Edge>{}, p));
}

TEST(ConstructTest, PerfectMatchingOnEmptyH0) {
  const Instance inst = ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "m_S": {"s1": 1, "s2": 1}, "m_T": {"t1": 1, "t2": 1}})");
  const Bigraph g = ConstructViaCover(inst);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(MatchingNumber(g), 2);
  ExpectAugmentation(inst, g);
}

TEST(ConstructTest, InfeasibleCarriesCertificate) {
  const Instance inst = ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "m_S": {"s1": 2, "s2": 2}, "m_T": {"t1": 3, "t2": 1}})");
  try {
    ConstructViaCover(inst);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.cert().x, 0b11u);
    EXPECT_EQ(e.cert().y, 0b01u);
    EXPECT_EQ(e.cert().lhs, 5);
  }
  EXPECT_FALSE(ConstructBrute(inst));
}

TEST(ConstructTest, ZeroDegrees) {
  const Instance ok = ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1"], "T": ["t1", "t2"], "h0": [["s1", "t1"]],
    "m_S": {"s1": 0}, "m_T": {"t1": 0, "t2": 0},
    "p_T": {"ground": ["t1", "t2"], "values": {"t1": 1}}})");
  const auto g = ConstructBrute(ok);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edge_count(), 0);
  const Instance bad = ParseInstanceText(R"({
    "mode": "msmt", "S": ["s1"], "T": ["t1", "t2"], "h0": [["s1", "t1"]],
    "m_S": {"s1": 0}, "m_T": {"t1": 0, "t2": 0},
    "p_T": {"ground": ["t1", "t2"], "values": {"t2": 1, "t1,t2": 1}}})");
  EXPECT_FALSE(ConstructBrute(bad));
}

TEST(ConstructTest, BothRoutesAgreeWithChecker) {
  int feasible = 0;
  for (const InstanceFile& f : RandomFiles(Mode::kMsmt, 400, 43)) {
    const Instance& inst = f.instance;
    const bool pass = CheckMsmt(inst).pass();
    const auto brute = ConstructBrute(inst);
    EXPECT_EQ(brute.has_value(), pass);
    if (!pass) {
      EXPECT_THROW(ConstructViaCover(inst), InfeasibleError);
      continue;
    }
    ++feasible;
    ExpectAugmentation(inst, *brute);
    ExpectAugmentation(inst, ConstructViaCover(inst));
    ExpectAugmentation(inst, SolveAugmentation(inst, Route::kBoth));
  }
  EXPECT_GT(feasible, 50);
}

TEST(ConstructTest, SOnlyUsesBruteRoute) {
  for (const InstanceFile& f : RandomFiles(Mode::kMsOnly, 200, 44)) {
    const Instance& inst = f.instance;
    if (!CheckMsOnly(inst).pass()) {
      EXPECT_THROW(SolveAugmentation(inst, Route::kBrute), InfeasibleError);
      continue;
    }
    ExpectAugmentation(inst, SolveAugmentation(inst, Route::kBrute));
  }
}

TEST(MatchingTest, Examples) {
  const GroundSets g({"s1", "s2"}, {"t1", "t2"});
  const auto m = FindMatchingCoveringBases(Bigraph::Complete(g),
                                           Matroid::Uniform(g.s_ids(), 2),
                                           Matroid::Uniform(g.t_ids(), 2));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 2u);
  EXPECT_TRUE(oracle::IsMatching(*m));
  EXPECT_FALSE(FindMatchingCoveringBases(Bigraph(g),
                                         Matroid::Uniform(g.s_ids(), 1),
                                         Matroid::Uniform(g.t_ids(), 1)));
}

TEST(MatchingTest, AgreesWithEnumeration) {
  for (const InstanceFile& f : RandomFiles(Mode::kBrualdi, 300, 45)) {
    const Instance& inst = f.instance;
    const auto m =
        FindMatchingCoveringBases(inst.h0, inst.matroid_s, *inst.matroid_t);
    EXPECT_EQ(m.has_value(), oracle::MatchingCoveringBasesExists(
                                 inst.h0, inst.matroid_s, *inst.matroid_t));
    if (!m) continue;
    const int ell = inst.matroid_s.rank();
    ASSERT_EQ(static_cast<int>(m->size()), ell);
    EXPECT_TRUE(oracle::IsMatching(*m));
    Mask xs = 0, ys = 0;
    for (const Edge& e : *m) {
      EXPECT_EQ(inst.h0.multiplicity(e.s, e.t), 1);
      xs |= Mask{1} << e.s;
      ys |= Mask{1} << e.t;
    }
    EXPECT_EQ(inst.matroid_s.rank(xs), ell);
    EXPECT_EQ(inst.matroid_t->rank(ys), ell);
  }
}

Instance RyserGen(const std::string& m_s, const std::string& m_t, int ell) {
  return ParseInstanceText(
      R"({"mode": "ryser_gen", "S": ["s1", "s2", "s3"], "T": ["t1", "t2", "t3"],
          "m_S": )" + m_s + R"(, "m_T": )" + m_t + R"(,
          "M_S": {"kind": "uniform", "k": )" + std::to_string(ell) + R"(},
          "M_T": {"kind": "uniform", "k": )" + std::to_string(ell) + R"(},
          "ell": )" + std::to_string(ell) + "}");
}

TEST(SolveTermRankTest, Examples) {
  const Instance zero = RyserGen(R"({"s1": 1, "s2": 0, "s3": 0})",
                                 R"({"t1": 0, "t2": 1, "t3": 0})", 0);
  const auto z = SolveTermRank(zero, Route::kCover);
  ASSERT_TRUE(std::holds_alternative<TermRankSolution>(z));
  EXPECT_TRUE(std::get<TermRankSolution>(z).matching.empty());
  EXPECT_TRUE(Fits(std::get<TermRankSolution>(z).graph, zero.degrees));

  const Instance good = RyserGen(R"({"s1": 2, "s2": 1, "s3": 1})",
                                 R"({"t1": 2, "t2": 1, "t3": 1})", 3);
  const auto r = SolveTermRank(good, Route::kCover);
  ASSERT_TRUE(std::holds_alternative<TermRankSolution>(r));
  const TermRankSolution& sol = std::get<TermRankSolution>(r);
  EXPECT_TRUE(Fits(sol.graph, good.degrees));
  EXPECT_TRUE(sol.graph.simple());
  EXPECT_EQ(sol.matching.size(), 3u);
  EXPECT_TRUE(oracle::IsMatching(sol.matching));
  for (const Edge& e : sol.matching) EXPECT_EQ(sol.graph.multiplicity(e.s, e.t), 1);
  EXPECT_EQ(oracle::MatchingNumber(sol.graph.edges()), 3);

  const Instance bad = RyserGen(R"({"s1": 2, "s2": 2, "s3": 0})",
                                R"({"t1": 2, "t2": 2, "t3": 0})", 3);
  const auto c = SolveTermRank(bad, Route::kCover);
  ASSERT_TRUE(std::holds_alternative<ViolationCert>(c));
  EXPECT_EQ(std::get<ViolationCert>(c).x, 0b011u);
}

TEST(SolveTermRankTest, RandomInstancesAgreeWithChecker) {
  for (const InstanceFile& f : RandomFiles(Mode::kRyserGen, 200, 46)) {
    const Instance& inst = f.instance;
    const bool pass = CheckRyserGen(inst).pass();
    const auto r = SolveTermRank(inst, Route::kBoth);
    EXPECT_EQ(std::holds_alternative<TermRankSolution>(r), pass);
    if (!pass) continue;
    const TermRankSolution& sol = std::get<TermRankSolution>(r);
    const Bigraph full = Union(inst.h0, sol.graph);
    EXPECT_TRUE(full.simple());
    EXPECT_TRUE(Fits(sol.graph, inst.degrees));
    EXPECT_TRUE(oracle::MatchingCoveringBasesExists(full, inst.matroid_s,
                                                    *inst.matroid_t));
    EXPECT_EQ(static_cast<int>(sol.matching.size()), *inst.target_rank);
  }
}

}  // namespace
}  // namespace termrank
