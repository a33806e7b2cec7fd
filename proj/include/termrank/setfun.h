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

#ifndef TERMRANK_SETFUN_H_
#define TERMRANK_SETFUN_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termrank/bigraph.h"
#include "termrank/ground.h"
#include "termrank/matroid.h"

namespace termrank {

// Integer-valued function on every subset of a small ground set. Negative
// values are kept as they are.
class SetFunction {
 public:
  SetFunction(std::vector<std::string> ground, std::vector<int> values);

  static SetFunction Zero(std::vector<std::string> ground);
  // Y -> r(ground) - r(ground - Y).
  static SetFunction Corank(const Matroid& m);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Mask full() const { return FullMask(size()); }
  const std::vector<int>& values() const { return values_; }

  int operator()(Mask a) const { return values_[a]; }

  SetFunction Shifted(int delta) const;
  // max(p, 0) pointwise.
  SetFunction PositivePart() const;
  // Restriction to the subsets that avoid `index`; higher indices shift down.
  SetFunction DeleteElement(int index) const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<int> values_;
};

enum class SupermodularMode {
  kFull,
  // X & Y non-empty, X and Y non-comparable.
  kIntersecting,
  // X & Y & T non-empty, non-comparable.
  kTIntersecting,
  // T-intersecting and S - (X | Y) non-empty.
  kSTCrossing,
};

struct SupermodularViolation {
  Mask x = 0;
  Mask y = 0;
  // p(X) + p(Y) and p(X & Y) + p(X | Y).
  int pair_sum = 0;
  int meet_join_sum = 0;
};

// Checks p(X) + p(Y) <= p(X & Y) + p(X | Y) on the pairs the mode selects
// (only where p(X), p(Y) > 0 when `positively`). Returns the first failing
// pair in increasing (X, Y) mask order with X < Y. For the T-sensitive
// modes, s_part and t_part must partition p's ground set.
std::optional<SupermodularViolation> ClassifySupermodular(
    const SetFunction& p, SupermodularMode mode, bool positively,
    Mask s_part = 0, Mask t_part = 0);

// Same, with the S/T split of a function defined on V.
std::optional<SupermodularViolation> ClassifyOnV(const SetFunction& p,
                                                 const GroundSets& grounds,
                                                 SupermodularMode mode,
                                                 bool positively);

// Membership table of H_0: the subsets V' of V that no arc of h0 (oriented
// S -> T) enters. Closed under union and intersection.
class ClosedFamily {
 public:
  explicit ClosedFamily(const Bigraph& h0);

  bool Contains(Mask v) const { return member_[v] != 0; }

 private:
  std::vector<char> member_;
};

// V_s = {v in V - s : sv not in F_0}, as a V-mask.
Mask VsSet(const Bigraph& h0, int s);

// The demand function on V used to reduce the degree-specified augmentation
// problem to arc covering:
//   X + y in H_0:            max(p_T(y) - r_S(X), m_T(y) - |X| + d_H0(y))
//   X + Y in H_0, |Y| >= 2:  p_T(Y) - r_S(X)
//   otherwise:               0
SetFunction BuildP0(const Bigraph& h0, const DegreeSpec& m,
                    const SetFunction& p_t, const Matroid& r_s);

// p_0 raised to m_S(s) on every V_s. Throws Error(kDegenerateInstance) if two
// nodes share the same V_s with different m_S values.
SetFunction BuildP1(const SetFunction& p0, const Bigraph& h0,
                    const DegreeSpec& m);

// Variant for S-only degree prescriptions: p_T(Y) - r_S(X) on members
// X + Y of H_0, 0 elsewhere.
SetFunction BuildP0SOnly(const Bigraph& h0, const SetFunction& p_t,
                         const Matroid& r_s);

// No ST-arc enters both: A & B & T empty, or S contained in A | B.
inline bool StIndependentPair(Mask a, Mask b, Mask s_part, Mask t_part) {
  return (a & b & t_part) == 0 || (s_part & ~(a | b)) == 0;
}

// Pairwise ST-independence of a family of V-masks (listed; a repeated set is
// paired with its copy).
bool StIndependent(std::span<const Mask> family, const GroundSets& grounds);

}  // namespace termrank

#endif  // TERMRANK_SETFUN_H_
