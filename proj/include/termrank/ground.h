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

#ifndef TERMRANK_GROUND_H_
#define TERMRANK_GROUND_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace termrank {

// A subset of a small ordered ground set, one bit per element.
using Mask = std::uint32_t;

inline constexpr int kDefaultMaxGround = 12;
// Hard ceiling: full set-function tables over 2^24 subsets are the most we
// are willing to materialize.
inline constexpr int kHardMaxGround = 24;

// Size cap for |S| + |T|. Reads TERMRANK_MAX_GROUND, falls back to
// kDefaultMaxGround.
int MaxGroundSize();

inline int Popcount(Mask m) { return std::popcount(m); }
inline Mask FullMask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool Contains(Mask m, int i) { return (m >> i) & 1u; }

// Positions of the set bits, ascending.
std::vector<int> Elements(Mask m);

// Lexicographic order on the ascending element lists of two masks. This is
// the tie-break order used for every certificate.
bool LexLess(Mask a, Mask b);

// The two colour classes S and T. Subsets of V = S + T are masks with the S
// nodes in the low bits followed by the T nodes.
class GroundSets {
 public:
  GroundSets(std::vector<std::string> s_ids, std::vector<std::string> t_ids,
             int cap = MaxGroundSize());

  int s_size() const { return static_cast<int>(s_ids_.size()); }
  int t_size() const { return static_cast<int>(t_ids_.size()); }
  int v_size() const { return s_size() + t_size(); }

  const std::vector<std::string>& s_ids() const { return s_ids_; }
  const std::vector<std::string>& t_ids() const { return t_ids_; }
  std::vector<std::string> v_ids() const;

  Mask full_s() const { return FullMask(s_size()); }
  Mask full_t() const { return FullMask(t_size()); }
  Mask full_v() const { return FullMask(v_size()); }

  // The S and T halves of V, as V-masks.
  Mask s_in_v() const { return full_s(); }
  Mask t_in_v() const { return full_t() << s_size(); }

  Mask Join(Mask x, Mask y) const { return x | (y << s_size()); }
  Mask SPart(Mask v) const { return v & full_s(); }
  Mask TPart(Mask v) const { return v >> s_size(); }

  std::optional<int> SIndex(const std::string& id) const;
  std::optional<int> TIndex(const std::string& id) const;

  // Throws Error(kSubsetViolation) if the mask has bits outside the side.
  void RequireSubsetOfS(Mask x) const;
  void RequireSubsetOfT(Mask y) const;

  friend bool operator==(const GroundSets&, const GroundSets&) = default;

 private:
  std::vector<std::string> s_ids_;
  std::vector<std::string> t_ids_;
};

}  // namespace termrank

#endif  // TERMRANK_GROUND_H_
