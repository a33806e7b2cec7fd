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

#include <algorithm>
#include <map>

#include "termrank/error.h"

namespace termrank {

SetFunction::SetFunction(std::vector<std::string> ground,
                         std::vector<int> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (size() > kHardMaxGround) {
    throw Error(ErrorCode::kInvalidInput, "set function ground too large");
  }
  if (values_.size() != (std::size_t{1} << size())) {
    throw Error(ErrorCode::kInvalidInput,
                "set function must be defined on every subset");
  }
}

SetFunction SetFunction::Zero(std::vector<std::string> ground) {
  std::size_t count = std::size_t{1} << ground.size();
  return SetFunction(std::move(ground), std::vector<int>(count, 0));
}

SetFunction SetFunction::Corank(const Matroid& m) {
  std::vector<int> values(std::size_t{1} << m.size());
  for (Mask y = 0; y < values.size(); ++y) values[y] = m.Corank(y);
  return SetFunction(m.ground(), std::move(values));
}

SetFunction SetFunction::Shifted(int delta) const {
  std::vector<int> values = values_;
  for (int& v : values) v += delta;
  return SetFunction(ground_, std::move(values));
}

SetFunction SetFunction::PositivePart() const {
  std::vector<int> values = values_;
  for (int& v : values) v = std::max(v, 0);
  return SetFunction(ground_, std::move(values));
}

SetFunction SetFunction::DeleteElement(int index) const {
  if (index < 0 || index >= size() || size() == 1) {
    throw Error(ErrorCode::kInvalidInput, "cannot delete set function element");
  }
  std::vector<std::string> ground = ground_;
  ground.erase(ground.begin() + index);
  std::vector<int> values(std::size_t{1} << (size() - 1));
  for (Mask a = 0; a < values.size(); ++a) {
    Mask low = a & FullMask(index);
    Mask high = (a >> index) << (index + 1);
    values[a] = values_[low | high];
  }
  return SetFunction(std::move(ground), std::move(values));
}

namespace {

bool PairSelected(Mask x, Mask y, SupermodularMode mode, Mask s_part,
                  Mask t_part) {
  if (mode == SupermodularMode::kFull) return true;
  if (IsSubset(x, y) || IsSubset(y, x)) return false;
  switch (mode) {
    case SupermodularMode::kIntersecting:
      return (x & y) != 0;
    case SupermodularMode::kTIntersecting:
      return (x & y & t_part) != 0;
    case SupermodularMode::kSTCrossing:
      return (x & y & t_part) != 0 && (s_part & ~(x | y)) != 0;
    case SupermodularMode::kFull:
      break;
  }
  return true;
}

}  // namespace

std::optional<SupermodularViolation> ClassifySupermodular(
    const SetFunction& p, SupermodularMode mode, bool positively, Mask s_part,
    Mask t_part) {
  if (mode == SupermodularMode::kTIntersecting ||
      mode == SupermodularMode::kSTCrossing) {
    if ((s_part & t_part) != 0 || (s_part | t_part) != p.full()) {
      throw Error(ErrorCode::kGroundMismatch,
                  "S and T must partition the set function's ground set");
    }
  }
  std::vector<Mask> candidates;
  for (Mask a = 0; a <= p.full(); ++a) {
    if (!positively || p(a) > 0) candidates.push_back(a);
    if (a == p.full()) break;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Mask x = candidates[i];
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Mask y = candidates[j];
      if (!PairSelected(x, y, mode, s_part, t_part)) continue;
      int pair_sum = p(x) + p(y);
      int meet_join_sum = p(x & y) + p(x | y);
      if (pair_sum > meet_join_sum) {
        return SupermodularViolation{x, y, pair_sum, meet_join_sum};
      }
    }
  }
  return std::nullopt;
}

std::optional<SupermodularViolation> ClassifyOnV(const SetFunction& p,
                                                 const GroundSets& grounds,
                                                 SupermodularMode mode,
                                                 bool positively) {
  if (p.ground() != grounds.v_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "set function is not on V");
  }
  return ClassifySupermodular(p, mode, positively, grounds.s_in_v(),
                              grounds.t_in_v());
}

ClosedFamily::ClosedFamily(const Bigraph& h0)
    : member_(std::size_t{1} << h0.grounds().v_size(), 0) {
  const GroundSets& g = h0.grounds();
  for (Mask v = 0; v < member_.size(); ++v) {
    const Mask x = g.SPart(v);
    bool ok = true;
    for (int t : Elements(g.TPart(v))) {
      if (!IsSubset(h0.t_neighbors(t), x)) {
        ok = false;
        break;
      }
    }
    member_[v] = ok ? 1 : 0;
  }
}

Mask VsSet(const Bigraph& h0, int s) {
  const GroundSets& g = h0.grounds();
  Mask others = g.full_s() & ~(Mask{1} << s);
  Mask non_neighbors = g.full_t() & ~h0.s_neighbors(s);
  return g.Join(others, non_neighbors);
}

namespace {

void RequireSameGrounds(const Bigraph& h0, const SetFunction& p_t,
                        const Matroid& r_s) {
  if (!h0.simple()) {
    throw Error(ErrorCode::kNotSimple, "the initial graph must be simple");
  }
  if (p_t.ground() != h0.grounds().t_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "p_T is not defined on T");
  }
  if (r_s.ground() != h0.grounds().s_ids()) {
    throw Error(ErrorCode::kGroundMismatch, "M_S is not defined on S");
  }
}

}  // namespace

SetFunction BuildP0(const Bigraph& h0, const DegreeSpec& m,
                    const SetFunction& p_t, const Matroid& r_s) {
  RequireSameGrounds(h0, p_t, r_s);
  if (!m.has_t() ||
      static_cast<int>(m.s_degrees().size()) != h0.grounds().s_size()) {
    throw Error(ErrorCode::kGroundMismatch,
                "p_0 needs a full degree specification on the same grounds");
  }
  const GroundSets& g = h0.grounds();
  ClosedFamily closed(h0);
  std::vector<int> values(std::size_t{1} << g.v_size(), 0);
  for (Mask v = 0; v < values.size(); ++v) {
    if (!closed.Contains(v)) continue;
    const Mask x = g.SPart(v);
    const Mask y = g.TPart(v);
    const int size_y = Popcount(y);
    if (size_y == 0) continue;
    int value = p_t(y) - r_s.rank(x);
    if (size_y == 1) {
      const int t = std::countr_zero(y);
      value = std::max(value,
                       m.t_degrees()[t] - Popcount(x) + h0.t_degree(t));
    }
    values[v] = value;
  }
  return SetFunction(g.v_ids(), std::move(values));
}

SetFunction BuildP1(const SetFunction& p0, const Bigraph& h0,
                    const DegreeSpec& m) {
  const GroundSets& g = h0.grounds();
  if (p0.ground() != g.v_ids() ||
      static_cast<int>(m.s_degrees().size()) != g.s_size()) {
    throw Error(ErrorCode::kGroundMismatch, "p_1 inputs disagree on V");
  }
  std::map<Mask, int> raised;
  for (int s = 0; s < g.s_size(); ++s) {
    const Mask vs = VsSet(h0, s);
    auto [it, inserted] = raised.emplace(vs, m.s_degrees()[s]);
    if (!inserted && it->second != m.s_degrees()[s]) {
      throw Error(ErrorCode::kDegenerateInstance,
                  "nodes with identical V_s carry different m_S values (" +
                      g.s_ids()[s] + ")");
    }
  }
  std::vector<int> values = p0.values();
  for (const auto& [vs, value] : raised) values[vs] = value;
  return SetFunction(p0.ground(), std::move(values));
}

SetFunction BuildP0SOnly(const Bigraph& h0, const SetFunction& p_t,
                         const Matroid& r_s) {
  RequireSameGrounds(h0, p_t, r_s);
  const GroundSets& g = h0.grounds();
  ClosedFamily closed(h0);
  std::vector<int> values(std::size_t{1} << g.v_size(), 0);
  for (Mask v = 0; v < values.size(); ++v) {
    if (closed.Contains(v)) values[v] = p_t(g.TPart(v)) - r_s.rank(g.SPart(v));
  }
  return SetFunction(g.v_ids(), std::move(values));
}

bool StIndependent(std::span<const Mask> family, const GroundSets& grounds) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!StIndependentPair(family[i], family[j], grounds.s_in_v(),
                             grounds.t_in_v())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace termrank
