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

#include "termrank/io.h"

#include <gtest/gtest.h>

#include "termrank/error.h"
#include "termrank/harness.h"

namespace termrank {
namespace {

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(Json::parse(text));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput) << e.what();
    return e.what();
  }
  return "";
}

TEST(IoTest, RoundTripsRandomInstances) {
  for (Mode mode : {Mode::kOre, Mode::kMsmt, Mode::kMsOnly, Mode::kFully,
                    Mode::kRyser, Mode::kBrualdi, Mode::kRyserGen}) {
    for (int i = 0; i < 50; ++i) {
      Rng rng = InstanceRng(51, i);
      const InstanceFile f = RandomInstance(rng, mode, GeneratorLimits{});
      const Json j = InstanceToJson(f);
      const InstanceFile back = ParseInstance(j);
      EXPECT_EQ(back.mode, mode);
      EXPECT_EQ(InstanceToJson(back), j);
      EXPECT_EQ(back.instance.h0, f.instance.h0);
      EXPECT_EQ(back.instance.degrees, f.instance.degrees);
      EXPECT_EQ(back.instance.demand_t, f.instance.demand_t);
      EXPECT_EQ(back.instance.matroid_s.rank_table(),
                f.instance.matroid_s.rank_table());
    }
  }
}

TEST(IoTest, ModeNames) {
  for (const char* name :
       {"ore", "msmt", "ms_only", "fully", "ryser", "brualdi", "ryser_gen"}) {
    const auto mode = ModeFromName(name);
    ASSERT_TRUE(mode);
    EXPECT_EQ(ModeName(*mode), name);
  }
  EXPECT_FALSE(ModeFromName("nope"));
}

TEST(IoTest, ErrorsCarryJsonPaths) {
  EXPECT_NE(ErrorOf(R"({"mode": "ore", "S": ["s1"], "T": ["t1"],
      "m_S": {"s1": 0}, "m_T": {"t1": 0}, "foo": 1})")
                .find("$.foo"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "ms_only", "S": ["s1"], "T": ["t1"],
      "m_S": {"s1": 0}, "m_T": {"t1": 0}})")
                .find("$.m_T"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "msmt", "S": ["s1", "s2"], "T": ["t1"],
      "m_S": {"s1": 0}, "m_T": {"t1": 0}})")
                .find("$.m_S.s2"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"S": ["s1"], "T": ["t1"]})").find("$.mode"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "ore", "S": ["s1"], "T": ["t1"],
      "h0": [["s1", "t9"]], "m_S": {"s1": 0}, "m_T": {"t1": 0}})")
                .find("$.h0[0][1]"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "msmt", "S": ["s1"], "T": ["t1"],
      "m_S": {"s1": 0}, "m_T": {"t1": 0},
      "M_S": {"kind": "uniform", "k": 5}})")
                .find("$.M_S"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "ryser", "S": ["s1"], "T": ["t1"],
      "m_S": {"s1": 0}, "m_T": {"t1": 0}})")
                .find("$.ell"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"mode": "brualdi", "S": ["s1"], "T": ["t1"]})")
                .find("$.M_T"),
            std::string::npos);
}

TEST(IoTest, MalformedFile) {
  try {
    LoadInstanceFile(TERMRANK_TEST_DATA "/malformed.json");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("malformed JSON"), std::string::npos);
  }
}

TEST(IoTest, DefaultsForDemandAndRank) {
  const InstanceFile f = ParseInstance(Json::parse(R"({
    "mode": "brualdi", "S": ["s1", "s2"], "T": ["t1", "t2"],
    "h0": [["s1", "t1"]],
    "M_S": {"kind": "uniform", "k": 1}, "M_T": {"kind": "free"}})"));
  EXPECT_EQ(f.instance.target_rank, 1);
  EXPECT_EQ(f.instance.demand_t, SetFunction::Corank(*f.instance.matroid_t));

  const InstanceFile z = ParseInstance(Json::parse(R"({
    "mode": "msmt", "S": ["s1"], "T": ["t1", "t2"],
    "m_S": {"s1": 1}, "m_T": {"t1": 1, "t2": 0}})"));
  EXPECT_EQ(z.instance.demand_t, SetFunction::Zero({"t1", "t2"}));
}

TEST(IoTest, SetFunctionKeysFollowGroundOrder) {
  const SetFunction p({"b", "a"}, {0, 1, 2, 3});
  const Json j = SetFunctionToJson(p);
  EXPECT_EQ(j["values"]["b,a"], 3);
  EXPECT_EQ(j["values"][""], 0);
  EXPECT_EQ(SetFunctionFromJson(j, "$"), p);
  const SetFunction sparse =
      SetFunctionFromJson(Json::parse(R"({"ground": ["x", "y"],
                                          "values": {"y,x": 2}})"),
                          "$");
  EXPECT_EQ(sparse.values(), (std::vector<int>{0, 0, 0, 2}));
}

TEST(IoTest, CertificateJson) {
  const GroundSets g({"s1", "s2"}, {"t1", "t2"});
  ViolationCert c;
  c.which = Condition::kMsmt;
  c.x = 0b11;
  c.y = 0b01;
  c.parts = {0b10};
  c.lhs = 5;
  c.rhs = 4;
  const Json j = CertToJson(c, g);
  EXPECT_EQ(j["condition"], "msmt");
  EXPECT_EQ(j["X"], Json({"s1", "s2"}));
  EXPECT_EQ(j["Y"], Json({"t1"}));
  EXPECT_EQ(j["parts"], Json::array({Json({"t2"})}));
  EXPECT_EQ(j["lhs"], 5);
}

}  // namespace
}  // namespace termrank
