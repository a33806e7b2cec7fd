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

#ifndef TERMRANK_ERROR_H_
#define TERMRANK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace termrank {

enum class ErrorCode {
  kInvalidInput,
  kGroundMismatch,
  kSubsetViolation,
  kNotSimple,
  kAxiomViolation,
  kRankMismatch,
  // Target rank larger than what the matroids can support.
  kRankHypothesis,
  kNotSupermodular,
  kDegenerateInstance,
  kUnboundedDemand,
  kPrecondition,
  kInfeasible,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
// Internal consistency failures (a mathematical identity not holding) are
// reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace termrank

#endif  // TERMRANK_ERROR_H_
