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

#include "termrank/harness.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "termrank/commands.h"
#include "termrank/cover.h"
#include "termrank/error.h"

namespace termrank {

namespace {

constexpr int kMaxMinimized = 10;

bool Coin(Rng& rng) { return UniformInt(rng, 0, 1) == 1; }

std::vector<std::string> Ids(char prefix, int n) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

Bigraph RandomSubgraph(Rng& rng, const GroundSets& g, double density,
                       int max_edges) {
  std::bernoulli_distribution pick(density);
  Bigraph h(g);
  for (int s = 0; s < g.s_size(); ++s) {
    for (int t = 0; t < g.t_size(); ++t) {
      if (pick(rng) && h.edge_count() < max_edges) h.AddEdge({s, t});
    }
  }
  return h;
}

// Either read off a random subgraph of G0 (always realizable by degrees
// alone) or drawn independently with equal totals.
DegreeSpec RandomDegrees(Rng& rng, const Bigraph& h0, int max_degree,
                         bool s_only, bool planted_only = false) {
  const GroundSets& g = h0.grounds();
  std::vector<int> ms(g.s_size(), 0);
  std::vector<int> mt(g.t_size(), 0);
  if (planted_only || Coin(rng)) {
    for (const Edge& e : BipartiteComplement(h0).edges()) {
      if (Coin(rng) && ms[e.s] < max_degree && mt[e.t] < max_degree) {
        ++ms[e.s];
        ++mt[e.t];
      }
    }
  } else {
    for (int& d : ms) d = UniformInt(rng, 0, max_degree);
    int total = 0;
    for (int d : ms) total += d;
    while (total > g.t_size() * max_degree) {
      const int s = UniformInt(rng, 0, g.s_size() - 1);
      if (ms[s] > 0) {
        --ms[s];
        --total;
      }
    }
    for (int k = 0; k < total; ++k) {
      std::vector<int> room;
      for (int t = 0; t < g.t_size(); ++t) {
        if (mt[t] < max_degree) room.push_back(t);
      }
      ++mt[room[UniformInt(rng, 0, static_cast<int>(room.size()) - 1)]];
    }
  }
  if (s_only) return DegreeSpec::SOnly(g, ms);
  return DegreeSpec::Full(g, ms, mt);
}

// Visits every subgraph of G0 that fits the degree specification until the
// visitor returns true.
bool ForEachFittingSubgraph(const Instance& inst,
                            const std::function<bool(const Bigraph&)>& visit) {
  const GroundSets& g = inst.grounds();
  const std::vector<Edge> candidates = BipartiteComplement(inst.h0).edges();
  std::vector<int> rs = inst.degrees.s_degrees();
  std::vector<int> rt = inst.degrees.has_t() ? inst.degrees.t_degrees()
                                             : std::vector<int>(g.t_size(), 0);
  Bigraph current(g);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == candidates.size()) {
      for (int d : rs) {
        if (d != 0) return false;
      }
      if (inst.degrees.has_t()) {
        for (int d : rt) {
          if (d != 0) return false;
        }
      }
      return visit(current);
    }
    const Edge e = candidates[i];
    if (rs[e.s] > 0 && (!inst.degrees.has_t() || rt[e.t] > 0)) {
      --rs[e.s];
      --rt[e.t];
      current.AddEdge(e);
      const bool done = self(self, i + 1);
      current.RemoveEdge(e);
      ++rs[e.s];
      ++rt[e.t];
      if (done) return true;
    }
    return self(self, i + 1);
  };
  return rec(rec, 0);
}

std::string Says(bool v) { return v ? "feasible" : "infeasible"; }

std::optional<std::string> Compare(const std::string& a_name, bool a,
                                   const std::string& b_name, bool b) {
  if (a == b) return std::nullopt;
  return a_name + " says " + Says(a) + " but " + b_name + " says " + Says(b);
}

std::optional<std::string> CheckAugmentWitness(const Bigraph& g,
                                               const Instance& inst) {
  if (!Fits(g, inst.degrees)) return "witness does not fit";
  const Bigraph plus = Union(g, inst.h0);
  if (!plus.simple()) return "G+H0 is not simple";
  if (!MatroidCovers(plus, inst.matroid_s, inst.demand_t)) {
    return "G+H0 is not M_S-covering";
  }
  return std::nullopt;
}

// Min-max and supermodularity checks on p0/p1 of an instance with a full
// degree specification.
std::optional<std::string> CheckCoverIdentity(const Instance& inst,
                                              bool feasible) {
  if (ClassifySupermodular(inst.demand_t, SupermodularMode::kIntersecting,
                           true)) {
    return std::nullopt;
  }
  const GroundSets& g = inst.grounds();
  const SetFunction p0 =
      BuildP0(inst.h0, inst.degrees, inst.demand_t, inst.matroid_s);
  if (ClassifyOnV(p0, g, SupermodularMode::kTIntersecting, true)) {
    return "p0 is not positively T-intersecting supermodular";
  }
  std::optional<SetFunction> p1;
  try {
    p1 = BuildP1(p0, inst.h0, inst.degrees);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegenerateInstance) return std::nullopt;
    throw;
  }
  const bool crossing =
      !ClassifyOnV(*p1, g, SupermodularMode::kSTCrossing, true);
  if (feasible && !crossing) {
    return "p1 is not positively ST-crossing supermodular";
  }
  if (!crossing) return std::nullopt;
  try {
    const ArcCoverResult cover = MinArcCover(*p1, g);
    if (!cover.min_max_holds()) {
      return "min cover " + std::to_string(cover.arcs.size()) +
             " != max dual " + std::to_string(cover.dual.value);
    }
    if (!StIndependent(cover.dual.sets, g)) return "dual family not independent";
    if (!CoversDemand(g, cover.arcs, *p1)) return "cover misses demand";
    if (feasible && static_cast<long>(cover.arcs.size()) != inst.degrees.total()) {
      return "feasible instance whose min cover is not gamma";
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnboundedDemand) throw;
  }
  return std::nullopt;
}

bool CheckerVerdict(const CheckResult& r, bool fault) {
  return fault ? r.max_excess < 0 : r.pass();
}

std::optional<std::string> CrossCheckAugment(const Instance& inst,
                                             bool checker, bool cover_route) {
  const std::optional<Bigraph> brute = ConstructBrute(inst);
  if (auto d = Compare("checker", checker, "brute force", brute.has_value())) {
    return d;
  }
  if (brute) {
    if (auto d = CheckAugmentWitness(*brute, inst)) return "brute: " + *d;
  }
  if (!cover_route) return std::nullopt;
  bool cover_ok = false;
  try {
    const Bigraph g = ConstructViaCover(inst);
    if (auto d = CheckAugmentWitness(g, inst)) return "cover: " + *d;
    cover_ok = true;
  } catch (const InfeasibleError&) {
  }
  return Compare("checker", checker, "cover route", cover_ok);
}

std::optional<std::string> CrossCheckTermRank(const Instance& inst, int ell,
                                              bool checker) {
  const bool brute = ForEachFittingSubgraph(inst, [&](const Bigraph& g) {
    return FindMatchingCoveringBases(Union(g, inst.h0), inst.matroid_s,
                                     *inst.matroid_t)
        .has_value();
  });
  if (auto d = Compare("checker", checker, "brute force", brute)) return d;
  for (Route route : {Route::kCover, Route::kBrute}) {
    auto solved = SolveTermRank(inst, route);
    auto* s = std::get_if<TermRankSolution>(&solved);
    if (auto d = Compare("checker", checker, "term rank solver", s != nullptr)) {
      return d;
    }
    if (s) {
      if (!Fits(s->graph, inst.degrees)) return "term rank witness does not fit";
      if (static_cast<int>(s->matching.size()) != ell) return "short matching";
    }
  }
  return std::nullopt;
}

std::optional<std::string> CrossCheckImpl(const InstanceFile& file,
                                          bool fault) {
  const Instance& inst = file.instance;
  switch (file.mode) {
    case Mode::kOre: {
      const CheckResult r =
          CheckOre(BipartiteComplement(inst.h0), inst.degrees);
      return CrossCheckAugment(PlainInstance(inst), CheckerVerdict(r, fault),
                               true);
    }
    case Mode::kMsmt:
    case Mode::kFully: {
      const CheckResult r = CheckMsmt(inst);
      if (file.mode == Mode::kFully) {
        if (auto d = Compare("check_msmt", r.pass(), "check_fully",
                             CheckFully(inst).pass())) {
          return d;
        }
      }
      if (auto d = CrossCheckAugment(inst, CheckerVerdict(r, fault), true)) {
        return d;
      }
      return CheckCoverIdentity(inst, r.pass());
    }
    case Mode::kMsOnly: {
      const CheckResult r = CheckMsOnly(inst);
      return CrossCheckAugment(inst, CheckerVerdict(r, fault), false);
    }
    case Mode::kRyser: {
      const int ell = *inst.target_rank;
      const CheckResult r = CheckRyser(inst.grounds(), inst.degrees, ell);
      const Instance u = UniformInstance(inst, ell);
      if (auto d = Compare("check_ryser", r.pass(), "check_ryser_novel",
                           CheckRyserNovel(inst.h0, inst.degrees, ell).pass())) {
        return d;
      }
      if (auto d = Compare("check_ryser", r.pass(), "uniform check_ryser_gen",
                           CheckRyserGen(u).pass())) {
        return d;
      }
      const bool brute = ForEachFittingSubgraph(u, [&](const Bigraph& g) {
        return MatchingNumber(g) >= ell;
      });
      if (auto d = Compare("checker", CheckerVerdict(r, fault), "brute force",
                           brute)) {
        return d;
      }
      return CrossCheckTermRank(u, ell, r.pass());
    }
    case Mode::kBrualdi: {
      const CheckResult cover =
          CheckBrualdiCoverForm(inst.h0, inst.matroid_s, *inst.matroid_t);
      const CheckResult neighbor =
          CheckBrualdiNeighborForm(inst.h0, inst.matroid_s, *inst.matroid_t);
      if (auto d = Compare("cover form", cover.pass(), "neighbor form",
                           neighbor.pass())) {
        return d;
      }
      const bool found = FindMatchingCoveringBases(inst.h0, inst.matroid_s,
                                                   *inst.matroid_t)
                             .has_value();
      return Compare("checker", CheckerVerdict(cover, fault), "matching search",
                     found);
    }
    case Mode::kRyserGen: {
      const CheckResult r = CheckRyserGen(inst);
      return CrossCheckTermRank(inst, *inst.target_rank,
                                CheckerVerdict(r, fault));
    }
  }
  return std::nullopt;
}

std::vector<Json> ShrinkCandidates(const InstanceFile& file) {
  const Instance& inst = file.instance;
  const GroundSets& g = inst.grounds();
  const Json base = InstanceToJson(file);
  std::vector<Json> out;

  for (std::size_t i = 0; i < base["h0"].size(); ++i) {
    Json j = base;
    j["h0"].erase(i);
    out.push_back(std::move(j));
  }
  if (base.contains("m_S")) {
    for (int s = 0; s < g.s_size(); ++s) {
      if (inst.degrees.s_degrees()[s] == 0) continue;
      if (!inst.degrees.has_t()) {
        Json j = base;
        j["m_S"][g.s_ids()[s]] = inst.degrees.s_degrees()[s] - 1;
        out.push_back(std::move(j));
        continue;
      }
      for (int t = 0; t < g.t_size(); ++t) {
        if (inst.degrees.t_degrees()[t] == 0) continue;
        Json j = base;
        j["m_S"][g.s_ids()[s]] = inst.degrees.s_degrees()[s] - 1;
        j["m_T"][g.t_ids()[t]] = inst.degrees.t_degrees()[t] - 1;
        out.push_back(std::move(j));
      }
    }
  }

  auto drop_edges_at = [](Json& j, int side, const std::string& id) {
    Json kept = Json::array();
    for (const Json& e : j["h0"]) {
      if (e[side] != id) kept.push_back(e);
    }
    j["h0"] = kept;
  };
  if (g.s_size() > 1) {
    for (int s = 0; s < g.s_size(); ++s) {
      if (inst.degrees.s_degrees()[s] != 0) continue;
      const std::string& id = g.s_ids()[s];
      Json j = base;
      j["S"].erase(static_cast<std::size_t>(s));
      drop_edges_at(j, 0, id);
      if (j.contains("m_S")) j["m_S"].erase(id);
      j["M_S"] = MatroidToJson(inst.matroid_s.DeleteElement(s));
      out.push_back(std::move(j));
    }
  }
  if (g.t_size() > 1) {
    for (int t = 0; t < g.t_size(); ++t) {
      if (inst.degrees.has_t() && inst.degrees.t_degrees()[t] != 0) continue;
      const std::string& id = g.t_ids()[t];
      Json j = base;
      j["T"].erase(static_cast<std::size_t>(t));
      drop_edges_at(j, 1, id);
      if (j.contains("m_T")) j["m_T"].erase(id);
      if (inst.matroid_t) j["M_T"] = MatroidToJson(inst.matroid_t->DeleteElement(t));
      if (j.contains("p_T")) j["p_T"] = SetFunctionToJson(inst.demand_t.DeleteElement(t));
      out.push_back(std::move(j));
    }
  }
  return out;
}

}  // namespace

Rng InstanceRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Matroid RandomMatroid(Rng& rng, const std::vector<std::string>& ground,
                      std::optional<int> rank) {
  const int n = static_cast<int>(ground.size());
  const int kind = UniformInt(rng, 0, 2);
  if (kind == 0 && (!rank || *rank == n)) return Matroid::Free(ground);
  if (kind <= 1) {
    return Matroid::Uniform(ground, rank ? *rank : UniformInt(rng, 0, n));
  }
  const int want_blocks = UniformInt(rng, 1, n);
  std::vector<Mask> raw(want_blocks, 0);
  for (int i = 0; i < n; ++i) raw[UniformInt(rng, 0, want_blocks - 1)] |= Mask{1} << i;
  std::vector<Mask> blocks;
  for (Mask b : raw) {
    if (b != 0) blocks.push_back(b);
  }
  std::vector<int> caps(blocks.size(), 0);
  if (rank) {
    for (int k = 0; k < *rank; ++k) {
      std::vector<int> room;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (caps[b] < Popcount(blocks[b])) room.push_back(static_cast<int>(b));
      }
      ++caps[room[UniformInt(rng, 0, static_cast<int>(room.size()) - 1)]];
    }
  } else {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      caps[b] = UniformInt(rng, 0, Popcount(blocks[b]));
    }
  }
  return Matroid::Partition(ground, blocks, caps);
}

SetFunction RandomDemand(Rng& rng, const std::vector<std::string>& ground,
                         bool allow_truncation) {
  SetFunction p = SetFunction::Corank(RandomMatroid(rng, ground));
  if (allow_truncation && Coin(rng)) {
    p = p.Shifted(-UniformInt(rng, 1, 2)).PositivePart();
  }
  return p;
}

InstanceFile RandomInstance(Rng& rng, Mode mode, const GeneratorLimits& limits) {
  const int ns = UniformInt(rng, 1, limits.max_s);
  const int nt = UniformInt(rng, 1, limits.max_t);
  const GroundSets g(Ids('s', ns), Ids('t', nt));
  const double densities[] = {0.0, 0.25, 0.5};
  const double density = densities[UniformInt(rng, 0, 2)];
  const int cap = ns * nt;

  Bigraph h0(g);
  std::optional<DegreeSpec> degrees;
  Matroid m_s = Matroid::Free(g.s_ids());
  SetFunction demand = SetFunction::Zero(g.t_ids());
  std::optional<Matroid> m_t;
  std::optional<int> ell;

  switch (mode) {
    case Mode::kOre:
      h0 = RandomSubgraph(rng, g, density, cap);
      degrees = RandomDegrees(rng, h0, limits.max_degree, false);
      break;
    case Mode::kMsmt:
    case Mode::kFully:
    case Mode::kMsOnly:
      h0 = RandomSubgraph(rng, g, density, cap);
      degrees = RandomDegrees(rng, h0, limits.max_degree, mode == Mode::kMsOnly);
      m_s = RandomMatroid(rng, g.s_ids());
      demand = RandomDemand(rng, g.t_ids(), mode != Mode::kFully);
      break;
    case Mode::kRyser:
      // The classic condition presumes some simple graph fits.
      degrees = RandomDegrees(rng, h0, limits.max_degree, false, true);
      ell = UniformInt(rng, 0, std::min(ns, nt));
      break;
    case Mode::kBrualdi: {
      const double plus_densities[] = {0.25, 0.5, 0.75};
      h0 = RandomSubgraph(rng, g, plus_densities[UniformInt(rng, 0, 2)],
                          limits.max_brualdi_edges);
      degrees = DegreeSpec::Zero(g);
      ell = UniformInt(rng, 0, std::min({ns, nt, limits.max_brualdi_rank}));
      m_s = RandomMatroid(rng, g.s_ids(), ell);
      m_t = RandomMatroid(rng, g.t_ids(), ell);
      demand = SetFunction::Corank(*m_t);
      break;
    }
    case Mode::kRyserGen:
      h0 = RandomSubgraph(rng, g, density, cap);
      degrees = RandomDegrees(rng, h0, limits.max_degree, false);
      ell = UniformInt(rng, 0, std::min({ns, nt, limits.max_brualdi_rank}));
      m_s = RandomMatroid(rng, g.s_ids(), ell);
      m_t = RandomMatroid(rng, g.t_ids(), ell);
      demand = SetFunction::Corank(*m_t);
      break;
  }
  InstanceFile file{Instance{std::move(h0), std::move(*degrees), std::move(m_s),
                             std::move(demand), std::move(m_t), ell},
                    mode};
  // Canonical form: whatever the generator builds must survive a round trip.
  return ParseInstance(InstanceToJson(file));
}

std::optional<std::string> CrossCheck(const InstanceFile& file,
                                      bool inject_fault) {
  try {
    return CrossCheckImpl(file, inject_fault);
  } catch (const InfeasibleError& e) {
    return std::string("unexpected infeasibility: ") + e.what();
  } catch (const std::logic_error& e) {
    return std::string("internal identity failed: ") + e.what();
  }
}

InstanceFile Minimize(
    InstanceFile file,
    const std::function<bool(const InstanceFile&)>& still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Json& candidate : ShrinkCandidates(file)) {
      std::optional<InstanceFile> parsed;
      try {
        parsed = ParseInstance(candidate);
        if (!still_fails(*parsed)) continue;
      } catch (const Error&) {
        continue;
      }
      file = std::move(*parsed);
      progress = true;
      break;
    }
  }
  return file;
}

FuzzReport RunFuzz(const FuzzOptions& options) {
  if (options.modes.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no fuzz modes selected");
  }
  if (options.limits.max_s < 1 || options.limits.max_t < 1 ||
      options.limits.max_s + options.limits.max_t > MaxGroundSize()) {
    throw Error(ErrorCode::kInvalidInput, "fuzz sizes outside the cap");
  }
  struct Record {
    Mode mode = Mode::kMsmt;
    bool feasible = false;
    std::optional<std::string> discrepancy;
    std::optional<InstanceFile> instance;
  };
  const int count = std::max(0, options.count);
  std::vector<Record> records(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      Record& rec = records[i];
      rec.mode = options.modes[i % options.modes.size()];
      Rng rng = InstanceRng(options.seed, static_cast<std::uint64_t>(i));
      try {
        InstanceFile file = RandomInstance(rng, rec.mode, options.limits);
        rec.feasible = RunCheck(file).feasible;
        rec.discrepancy = CrossCheck(file, options.inject_fault);
        if (rec.discrepancy) rec.instance = std::move(file);
      } catch (const Error& e) {
        rec.discrepancy = std::string("generator produced an invalid instance: ") +
                          e.what();
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, 64);
  std::vector<std::thread> threads;
  for (int k = 1; k < jobs; ++k) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  Json by_mode = Json::object();
  for (Mode m : options.modes) {
    by_mode[std::string(ModeName(m))] = {{"instances", 0}, {"feasible", 0},
                                         {"infeasible", 0}};
  }
  Json discrepancies = Json::array();
  int total_discrepancies = 0;
  for (int i = 0; i < count; ++i) {
    const Record& rec = records[i];
    Json& stats = by_mode[std::string(ModeName(rec.mode))];
    stats["instances"] = stats["instances"].get<int>() + 1;
    const char* key = rec.feasible ? "feasible" : "infeasible";
    stats[key] = stats[key].get<int>() + 1;
    if (!rec.discrepancy) continue;
    ++total_discrepancies;
    Json d = {{"index", i}, {"mode", ModeName(rec.mode)},
              {"message", *rec.discrepancy}};
    if (rec.instance && total_discrepancies <= kMaxMinimized) {
      const InstanceFile small = Minimize(*rec.instance, [&](const InstanceFile& f) {
        return CrossCheck(f, options.inject_fault).has_value();
      });
      d["reproducer"] = InstanceToJson(small);
      d["minimized_message"] = *CrossCheck(small, options.inject_fault);
      if (!options.repro_dir.empty()) {
        std::filesystem::create_directories(options.repro_dir);
        const std::string path = options.repro_dir + "/repro_" +
                                 std::to_string(options.seed) + "_" +
                                 std::to_string(i) + ".json";
        std::ofstream(path) << d["reproducer"].dump(2) << "\n";
        d["file"] = path;
      }
    }
    discrepancies.push_back(std::move(d));
  }

  Json modes = Json::array();
  for (Mode m : options.modes) modes.push_back(ModeName(m));
  FuzzReport report;
  report.discrepancies = total_discrepancies;
  report.json = {{"seed", options.seed},
                 {"count", count},
                 {"modes", modes},
                 {"max_s", options.limits.max_s},
                 {"max_t", options.limits.max_t},
                 {"max_degree", options.limits.max_degree},
                 {"fault_injected", options.inject_fault},
                 {"by_mode", by_mode},
                 {"discrepancy_count", total_discrepancies},
                 {"discrepancies", discrepancies}};
  return report;
}

}  // namespace termrank
