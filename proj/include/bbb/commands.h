// Copyright 2026 The bbb Authors.
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

#ifndef BBB_COMMANDS_H_
#define BBB_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <string>

#include "bbb/bibranch.h"
#include "bbb/instance_io.h"
#include "bbb/solve.h"

namespace bbb {

// Stable exit code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitGuard = 4;
inline constexpr int kExitTheoremViolation = 5;

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

// Runs `body` and builds the final report: the command echo first, then
// the body's fields, then the exit code. Errors become reports with exit
// codes 2, 4 or 5.
CommandResult Execute(const Json& echo,
                      const std::function<CommandResult()>& body);

CommandResult RunValidate(const Instance& inst, const ArcSet& arcs);
CommandResult RunSolve(const Instance& inst, Method method,
                       const CuttingPlaneOptions& options = {});
CommandResult RunPack(const Instance& inst);
CommandResult RunPackingNumber(const Instance& inst);

enum class CheckKind { kTdi, kMconvex, kExchange, kIdp };
const char* CheckKindName(CheckKind kind);
CheckKind ParseCheckKind(const std::string& name);

// Any failed check gives exit code 5 and a counterexample in the report.
CommandResult RunCheck(const Instance& inst, CheckKind kind, uint64_t seed,
                       long trials);

// Serialized report, two-space indented, newline terminated.
std::string RenderReport(const Json& report);

}  // namespace bbb

#endif  // BBB_COMMANDS_H_
