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

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "termrank/error.h"

namespace termrank {

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 7> kModeNames = {{
    {Mode::kOre, "ore"},
    {Mode::kMsmt, "msmt"},
    {Mode::kMsOnly, "ms_only"},
    {Mode::kFully, "fully"},
    {Mode::kRyser, "ryser"},
    {Mode::kBrualdi, "brualdi"},
    {Mode::kRyserGen, "ryser_gen"},
}};

[[noreturn]] void Fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::kInvalidInput, path + ": " + msg);
}

void RequireObject(const Json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || a == key;
    if (!known) Fail(path + "." + key, "unknown field");
  }
}

int IntAt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) Fail(path, "integer out of range");
  return static_cast<int>(v);
}

std::vector<std::string> IdsAt(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of ids");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      Fail(path + "[" + std::to_string(i) + "]", "expected a string id");
    }
    ids.push_back(j[i].get<std::string>());
  }
  return ids;
}

int IndexOf(const std::vector<std::string>& ids, const std::string& id,
            const std::string& path) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<int>(i);
  }
  Fail(path, "unknown id '" + id + "'");
}

std::vector<int> DegreesAt(const Json& j, const std::vector<std::string>& ids,
                           const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object mapping ids to degrees");
  std::vector<int> degrees(ids.size(), 0);
  std::vector<bool> seen(ids.size(), false);
  for (const auto& [key, value] : j.items()) {
    const int i = IndexOf(ids, key, path + "." + key);
    degrees[i] = IntAt(value, path + "." + key);
    if (degrees[i] < 0) Fail(path + "." + key, "negative degree");
    seen[i] = true;
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!seen[i]) Fail(path + "." + ids[i], "missing degree");
  }
  return degrees;
}

Json DegreesToJson(const std::vector<int>& degrees,
                   const std::vector<std::string>& ids) {
  Json j = Json::object();
  for (std::size_t i = 0; i < ids.size(); ++i) j[ids[i]] = degrees[i];
  return j;
}

std::string SubsetKey(Mask m, const std::vector<std::string>& ids) {
  std::string key;
  for (int i : Elements(m)) {
    if (!key.empty()) key += ',';
    key += ids[i];
  }
  return key;
}

// Rewraps library validation errors so they carry the field path.
template <typename F>
auto AtPath(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace

std::string_view ModeName(Mode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<Mode> ModeFromName(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

Json SubsetToJson(Mask m, const std::vector<std::string>& ids) {
  Json j = Json::array();
  for (int i : Elements(m)) j.push_back(ids[i]);
  return j;
}

Mask SubsetFromJson(const Json& j, const std::vector<std::string>& ids,
                    const std::string& path) {
  Mask m = 0;
  const std::vector<std::string> members = IdsAt(j, path);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const int index = IndexOf(ids, members[i], at);
    if (Contains(m, index)) Fail(at, "duplicate id '" + members[i] + "'");
    m |= Mask{1} << index;
  }
  return m;
}

Json MatroidToJson(const Matroid& m) {
  switch (m.kind()) {
    case MatroidKind::kFree:
      return {{"kind", "free"}};
    case MatroidKind::kUniform:
      return {{"kind", "uniform"}, {"k", m.uniform_k()}};
    case MatroidKind::kPartition: {
      Json blocks = Json::array();
      for (Mask b : m.blocks()) blocks.push_back(SubsetToJson(b, m.ground()));
      return {{"kind", "partition"}, {"blocks", blocks}, {"caps", m.caps()}};
    }
    case MatroidKind::kExplicit: {
      Json bases = Json::array();
      for (Mask b : m.Bases()) bases.push_back(SubsetToJson(b, m.ground()));
      return {{"kind", "explicit"}, {"bases", bases}};
    }
  }
  return {};
}

Matroid MatroidFromJson(const Json& j, const std::vector<std::string>& ground,
                        const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    Fail(path, "expected a matroid descriptor with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "free") {
    RequireObject(j, path, {"kind"});
    return Matroid::Free(ground);
  }
  if (kind == "uniform") {
    RequireObject(j, path, {"kind", "k"});
    if (!j.contains("k")) Fail(path + ".k", "missing");
    const int k = IntAt(j["k"], path + ".k");
    return AtPath(path, [&] { return Matroid::Uniform(ground, k); });
  }
  if (kind == "partition") {
    RequireObject(j, path, {"kind", "blocks", "caps"});
    if (!j.contains("blocks") || !j["blocks"].is_array()) {
      Fail(path + ".blocks", "expected an array of id arrays");
    }
    if (!j.contains("caps") || !j["caps"].is_array()) {
      Fail(path + ".caps", "expected an array of integers");
    }
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
      blocks.push_back(SubsetFromJson(
          j["blocks"][i], ground, path + ".blocks[" + std::to_string(i) + "]"));
    }
    std::vector<int> caps;
    for (std::size_t i = 0; i < j["caps"].size(); ++i) {
      caps.push_back(
          IntAt(j["caps"][i], path + ".caps[" + std::to_string(i) + "]"));
    }
    return AtPath(path, [&] { return Matroid::Partition(ground, blocks, caps); });
  }
  if (kind == "explicit") {
    RequireObject(j, path, {"kind", "bases"});
    if (!j.contains("bases") || !j["bases"].is_array()) {
      Fail(path + ".bases", "expected an array of id arrays");
    }
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < j["bases"].size(); ++i) {
      bases.push_back(SubsetFromJson(
          j["bases"][i], ground, path + ".bases[" + std::to_string(i) + "]"));
    }
    return AtPath(path, [&] { return Matroid::FromBases(ground, bases); });
  }
  Fail(path + ".kind", "unknown matroid kind '" + kind + "'");
}

Json SetFunctionToJson(const SetFunction& p) {
  Json values = Json::object();
  for (Mask a = 0; a <= p.full(); ++a) values[SubsetKey(a, p.ground())] = p(a);
  return {{"ground", p.ground()}, {"values", values}};
}

SetFunction SetFunctionFromJson(const Json& j, const std::string& path) {
  RequireObject(j, path, {"ground", "values"});
  if (!j.contains("ground")) Fail(path + ".ground", "missing");
  const std::vector<std::string> ground = IdsAt(j["ground"], path + ".ground");
  if (static_cast<int>(ground.size()) > MaxGroundSize()) {
    Fail(path + ".ground", "ground set exceeds the size cap");
  }
  std::vector<int> values(std::size_t{1} << ground.size(), 0);
  if (j.contains("values")) {
    const Json& v = j["values"];
    if (!v.is_object()) Fail(path + ".values", "expected an object");
    std::set<Mask> seen;
    for (const auto& [key, value] : v.items()) {
      const std::string at = path + ".values[\"" + key + "\"]";
      Mask m = 0;
      if (!key.empty()) {
        std::stringstream in(key);
        std::string id;
        while (std::getline(in, id, ',')) {
          const int i = IndexOf(ground, id, at);
          if (Contains(m, i)) Fail(at, "duplicate id '" + id + "'");
          m |= Mask{1} << i;
        }
      }
      if (!seen.insert(m).second) Fail(at, "subset listed twice");
      values[m] = IntAt(value, at);
    }
  }
  return AtPath(path, [&] { return SetFunction(ground, values); });
}

Json EdgesToJson(std::span<const Edge> edges, const GroundSets& grounds) {
  Json j = Json::array();
  for (const Edge& e : edges) {
    j.push_back({grounds.s_ids()[e.s], grounds.t_ids()[e.t]});
  }
  return j;
}

std::vector<Edge> EdgesFromJson(const Json& j, const GroundSets& grounds,
                                const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of [s, t] pairs");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      Fail(at, "expected an [s, t] pair of ids");
    }
    edges.push_back({IndexOf(grounds.s_ids(), e[0].get<std::string>(), at + "[0]"),
                     IndexOf(grounds.t_ids(), e[1].get<std::string>(), at + "[1]")});
  }
  return edges;
}

Json CertToJson(const ViolationCert& cert, const GroundSets& grounds) {
  const auto& s = grounds.s_ids();
  const auto& t = grounds.t_ids();
  Json j = {{"condition", ConditionName(cert.which)},
            {"X", SubsetToJson(cert.x, s)},
            {"Y", SubsetToJson(cert.y, t)},
            {"lhs", cert.lhs},
            {"rhs", cert.rhs}};
  Json parts = Json::array();
  for (Mask p : cert.parts) parts.push_back(SubsetToJson(p, t));
  j["parts"] = parts;
  if (cert.t0) j["T0"] = SubsetToJson(*cert.t0, t);
  if (cert.x_prime) j["X_prime"] = SubsetToJson(*cert.x_prime, s);
  if (cert.y_prime) j["Y_prime"] = SubsetToJson(*cert.y_prime, t);
  return j;
}

InstanceFile ParseInstance(const Json& j, std::optional<Mode> mode_override) {
  RequireObject(j, "$",
                {"S", "T", "h0", "m_S", "m_T", "M_S", "M_T", "p_T", "ell",
                 "mode"});
  std::optional<Mode> mode = mode_override;
  if (!mode) {
    if (!j.contains("mode")) Fail("$.mode", "missing (or pass --mode)");
    if (!j["mode"].is_string()) Fail("$.mode", "expected a string");
    mode = ModeFromName(j["mode"].get<std::string>());
    if (!mode) Fail("$.mode", "unknown mode '" + j["mode"].get<std::string>() + "'");
  }
  if (!j.contains("S")) Fail("$.S", "missing");
  if (!j.contains("T")) Fail("$.T", "missing");
  std::vector<std::string> s_ids = IdsAt(j["S"], "$.S");
  std::vector<std::string> t_ids = IdsAt(j["T"], "$.T");
  GroundSets grounds = AtPath("$", [&] { return GroundSets(s_ids, t_ids); });

  Bigraph h0(grounds);
  if (j.contains("h0")) {
    for (const Edge& e : EdgesFromJson(j["h0"], grounds, "$.h0")) h0.AddEdge(e);
    if (!h0.simple()) Fail("$.h0", "repeated edge");
  }

  const bool s_only = *mode == Mode::kMsOnly;
  const bool needs_degrees = *mode != Mode::kBrualdi;
  if (s_only && j.contains("m_T")) Fail("$.m_T", "not allowed in ms_only mode");
  if (s_only && j.contains("M_T")) Fail("$.M_T", "not allowed in ms_only mode");
  if (needs_degrees && !j.contains("m_S")) Fail("$.m_S", "missing");
  if (needs_degrees && !s_only && !j.contains("m_T")) Fail("$.m_T", "missing");

  std::vector<int> m_s(s_ids.size(), 0);
  std::vector<int> m_t(t_ids.size(), 0);
  if (j.contains("m_S")) m_s = DegreesAt(j["m_S"], s_ids, "$.m_S");
  if (j.contains("m_T")) m_t = DegreesAt(j["m_T"], t_ids, "$.m_T");
  DegreeSpec degrees =
      s_only ? DegreeSpec::SOnly(grounds, m_s)
             : AtPath("$.m_T", [&] { return DegreeSpec::Full(grounds, m_s, m_t); });

  Matroid matroid_s = j.contains("M_S")
                          ? MatroidFromJson(j["M_S"], s_ids, "$.M_S")
                          : Matroid::Free(s_ids);
  std::optional<Matroid> matroid_t;
  if (j.contains("M_T")) matroid_t = MatroidFromJson(j["M_T"], t_ids, "$.M_T");
  if ((*mode == Mode::kBrualdi || *mode == Mode::kRyserGen) && !matroid_t) {
    Fail("$.M_T", "required in " + std::string(ModeName(*mode)) + " mode");
  }

  SetFunction demand = SetFunction::Zero(t_ids);
  if (j.contains("p_T")) {
    if (*mode == Mode::kRyserGen || *mode == Mode::kBrualdi) {
      Fail("$.p_T", "implied by M_T in this mode");
    }
    const Json& p = j["p_T"];
    if (p.is_object() && p.contains("corank")) {
      RequireObject(p, "$.p_T", {"corank"});
      demand = SetFunction::Corank(
          MatroidFromJson(p["corank"], t_ids, "$.p_T.corank"));
    } else {
      demand = SetFunctionFromJson(p, "$.p_T");
      if (demand.ground() != t_ids) {
        Fail("$.p_T.ground", "must list the ids of T in order");
      }
    }
  } else if (matroid_t) {
    demand = SetFunction::Corank(*matroid_t);
  }

  std::optional<int> ell;
  if (j.contains("ell")) {
    ell = IntAt(j["ell"], "$.ell");
    if (*ell < 0) Fail("$.ell", "negative");
  }
  if (*mode == Mode::kRyser) {
    if (!ell) Fail("$.ell", "required in ryser mode");
    if (h0.edge_count() != 0) Fail("$.h0", "ryser mode requires an empty h0");
  }
  if ((*mode == Mode::kBrualdi || *mode == Mode::kRyserGen) && !ell) {
    ell = matroid_s.rank();
  }

  InstanceFile file{Instance{std::move(h0), std::move(degrees),
                             std::move(matroid_s), std::move(demand),
                             std::move(matroid_t), ell},
                    *mode};
  AtPath("$", [&] {
    ValidateInstance(file.instance);
    return 0;
  });
  return file;
}

InstanceFile LoadInstanceFile(const std::string& path,
                              std::optional<Mode> mode_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": malformed JSON: " + e.what());
  }
  return ParseInstance(j, mode_override);
}

Json InstanceToJson(const InstanceFile& file) {
  const Instance& inst = file.instance;
  const GroundSets& g = inst.grounds();
  Json j = {{"mode", ModeName(file.mode)},
            {"S", g.s_ids()},
            {"T", g.t_ids()},
            {"h0", EdgesToJson(inst.h0.edges(), g)}};
  if (file.mode != Mode::kBrualdi) {
    j["m_S"] = DegreesToJson(inst.degrees.s_degrees(), g.s_ids());
    if (inst.degrees.has_t()) {
      j["m_T"] = DegreesToJson(inst.degrees.t_degrees(), g.t_ids());
    }
  }
  j["M_S"] = MatroidToJson(inst.matroid_s);
  if (inst.matroid_t) j["M_T"] = MatroidToJson(*inst.matroid_t);
  if (file.mode != Mode::kBrualdi && file.mode != Mode::kRyserGen) {
    j["p_T"] = SetFunctionToJson(inst.demand_t);
  }
  if (inst.target_rank) j["ell"] = *inst.target_rank;
  return j;
}

}  // namespace termrank
