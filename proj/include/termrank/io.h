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

#ifndef TERMRANK_IO_H_
#define TERMRANK_IO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "termrank/bigraph.h"
#include "termrank/feasibility.h"
#include "termrank/matroid.h"
#include "termrank/setfun.h"

namespace termrank {

using Json = nlohmann::json;

enum class Mode { kOre, kMsmt, kMsOnly, kFully, kRyser, kBrualdi, kRyserGen };

std::string_view ModeName(Mode mode);
std::optional<Mode> ModeFromName(std::string_view name);

// A parsed instance file. In brualdi mode h0 holds G+.
struct InstanceFile {
  Instance instance;
  Mode mode = Mode::kMsmt;
};

// Parse failures throw Error(kInvalidInput) whose message starts with the
// JSON path of the offending field, e.g. "$.m_S.s2: expected an integer".
InstanceFile ParseInstance(const Json& j,
                           std::optional<Mode> mode_override = std::nullopt);
InstanceFile LoadInstanceFile(const std::string& path,
                              std::optional<Mode> mode_override = std::nullopt);
Json InstanceToJson(const InstanceFile& file);

Json SubsetToJson(Mask m, const std::vector<std::string>& ids);
Mask SubsetFromJson(const Json& j, const std::vector<std::string>& ids,
                    const std::string& path);

Json MatroidToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j, const std::vector<std::string>& ground,
                        const std::string& path);

Json SetFunctionToJson(const SetFunction& p);
SetFunction SetFunctionFromJson(const Json& j, const std::string& path);

Json EdgesToJson(std::span<const Edge> edges, const GroundSets& grounds);
std::vector<Edge> EdgesFromJson(const Json& j, const GroundSets& grounds,
                                const std::string& path);

Json CertToJson(const ViolationCert& cert, const GroundSets& grounds);

}  // namespace termrank

#endif  // TERMRANK_IO_H_
