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

#include "termrank/commands.h"

#include <stdexcept>

#include "termrank/error.h"

namespace termrank {

namespace {

Outcome FromCheck(const CheckResult& r) {
  Outcome o;
  o.feasible = r.pass();
  o.cert = r.cert;
  o.max_excess = r.max_excess;
  o.evaluated = r.evaluated;
  return o;
}

int Ell(const Instance& inst) {
  if (!inst.target_rank) {
    throw Error(ErrorCode::kInvalidInput, "$.ell: required in this mode");
  }
  return *inst.target_rank;
}

std::optional<std::string> CheckMatching(const Bigraph& gplus,
                                         const std::vector<Edge>& matching,
                                         const Matroid& m_s,
                                         const Matroid& m_t, int ell) {
  Mask s_ends = 0;
  Mask t_ends = 0;
  for (const Edge& e : matching) {
    if (gplus.multiplicity(e.s, e.t) == 0) return "matching edge not in G+H0";
    if (Contains(s_ends, e.s) || Contains(t_ends, e.t)) {
      return "matching edges share an endpoint";
    }
    s_ends |= Mask{1} << e.s;
    t_ends |= Mask{1} << e.t;
  }
  if (static_cast<int>(matching.size()) != ell) return "matching size is not l";
  if (m_s.rank(s_ends) != ell || m_s.rank() != ell) {
    return "S-ends are not a basis of M_S";
  }
  if (m_t.rank(t_ends) != ell || m_t.rank() != ell) {
    return "T-ends are not a basis of M_T";
  }
  return std::nullopt;
}

}  // namespace

Instance PlainInstance(const Instance& inst) {
  Instance plain = inst;
  plain.matroid_s = Matroid::Free(inst.grounds().s_ids());
  plain.demand_t = SetFunction::Zero(inst.grounds().t_ids());
  return plain;
}

Instance UniformInstance(const Instance& inst, int ell) {
  Instance u = inst;
  u.matroid_s = Matroid::Uniform(inst.grounds().s_ids(), ell);
  u.matroid_t = Matroid::Uniform(inst.grounds().t_ids(), ell);
  u.demand_t = SetFunction::Corank(*u.matroid_t);
  return u;
}

Outcome RunCheck(const InstanceFile& file) {
  const Instance& inst = file.instance;
  switch (file.mode) {
    case Mode::kOre:
      return FromCheck(CheckOre(BipartiteComplement(inst.h0), inst.degrees));
    case Mode::kMsmt:
      return FromCheck(CheckMsmt(inst));
    case Mode::kMsOnly:
      return FromCheck(CheckMsOnly(inst));
    case Mode::kFully:
      return FromCheck(CheckFully(inst));
    case Mode::kRyser:
      return FromCheck(CheckRyser(inst.grounds(), inst.degrees, Ell(inst)));
    case Mode::kBrualdi:
      return FromCheck(CheckBrualdi(inst.h0, inst.matroid_s, *inst.matroid_t));
    case Mode::kRyserGen:
      return FromCheck(CheckRyserGen(inst));
  }
  throw std::logic_error("unhandled mode");
}

Outcome RunSolve(const InstanceFile& file, std::optional<Route> route) {
  const Instance& inst = file.instance;
  Outcome outcome = RunCheck(file);
  const Route chosen =
      route.value_or(file.mode == Mode::kMsOnly ? Route::kBrute : Route::kCover);

  auto augment = [&](const Instance& target) {
    try {
      outcome.graph = SolveAugmentation(target, chosen);
    } catch (const InfeasibleError& e) {
      if (outcome.feasible) {
        throw std::logic_error("constructor failed on a feasible instance");
      }
      return;
    }
    if (!outcome.feasible) {
      throw std::logic_error("constructor succeeded on an infeasible instance");
    }
  };
  auto term_rank = [&](const Instance& target) {
    auto solved = SolveTermRank(target, chosen);
    if (auto* s = std::get_if<TermRankSolution>(&solved)) {
      if (!outcome.feasible) {
        throw std::logic_error("term rank solved on an infeasible instance");
      }
      outcome.graph = std::move(s->graph);
      outcome.matching = std::move(s->matching);
    } else if (outcome.feasible) {
      throw std::logic_error("term rank solver disagrees with the checker");
    }
  };

  switch (file.mode) {
    case Mode::kOre:
      augment(PlainInstance(inst));
      break;
    case Mode::kMsmt:
    case Mode::kMsOnly:
    case Mode::kFully:
      augment(inst);
      break;
    case Mode::kRyser:
      if (outcome.feasible) term_rank(UniformInstance(inst, Ell(inst)));
      break;
    case Mode::kBrualdi: {
      auto m = FindMatchingCoveringBases(inst.h0, inst.matroid_s,
                                         *inst.matroid_t);
      if (m.has_value() != outcome.feasible) {
        throw std::logic_error("matching search disagrees with the checker");
      }
      outcome.matching = std::move(m);
      break;
    }
    case Mode::kRyserGen:
      term_rank(inst);
      break;
  }
  return outcome;
}

Json OutcomeToJson(const InstanceFile& file, const Outcome& outcome,
                   std::optional<double> wall_ms) {
  const GroundSets& g = file.instance.grounds();
  Json j = {{"mode", ModeName(file.mode)},
            {"verdict", outcome.feasible ? "feasible" : "infeasible"}};
  if (outcome.graph || outcome.matching) {
    Json w = Json::object();
    if (outcome.graph) w["edges"] = EdgesToJson(outcome.graph->edges(), g);
    if (outcome.matching) w["matching"] = EdgesToJson(*outcome.matching, g);
    j["witness"] = w;
  }
  if (outcome.cert) j["certificate"] = CertToJson(*outcome.cert, g);
  Json stats = {{"evaluated", outcome.evaluated},
                {"max_excess", outcome.max_excess}};
  if (wall_ms) stats["wall_ms"] = *wall_ms;
  j["stats"] = stats;
  return j;
}

std::optional<std::string> ValidateWitness(const InstanceFile& file,
                                           const Json& result) {
  const Instance& inst = file.instance;
  const GroundSets& g = inst.grounds();
  if (!result.is_object() || !result.contains("witness")) {
    return "result has no witness";
  }
  const Json& w = result["witness"];
  if (!w.is_object()) return "witness is not an object";

  std::vector<Edge> matching;
  if (w.contains("matching")) {
    matching = EdgesFromJson(w["matching"], g, "$.witness.matching");
  }
  if (file.mode == Mode::kBrualdi) {
    return CheckMatching(inst.h0, matching, inst.matroid_s, *inst.matroid_t,
                         *inst.target_rank);
  }
  if (!w.contains("edges")) return "witness has no edges";
  const Bigraph graph(g, EdgesFromJson(w["edges"], g, "$.witness.edges"));
  if (!Fits(graph, inst.degrees)) return "witness does not fit the degrees";
  const Bigraph gplus = Union(graph, inst.h0);
  if (!gplus.simple()) return "G+H0 is not simple";
  switch (file.mode) {
    case Mode::kOre:
      return std::nullopt;
    case Mode::kMsmt:
    case Mode::kMsOnly:
    case Mode::kFully:
      if (!MatroidCovers(gplus, inst.matroid_s, inst.demand_t)) {
        return "G+H0 is not M_S-covering";
      }
      return std::nullopt;
    case Mode::kRyser: {
      const Instance u = UniformInstance(inst, Ell(inst));
      return CheckMatching(gplus, matching, u.matroid_s, *u.matroid_t,
                           Ell(inst));
    }
    case Mode::kRyserGen:
      return CheckMatching(gplus, matching, inst.matroid_s, *inst.matroid_t,
                           *inst.target_rank);
    case Mode::kBrualdi:
      break;
  }
  return std::nullopt;
}

}  // namespace termrank
