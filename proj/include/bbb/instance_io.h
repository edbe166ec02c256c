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

#ifndef BBB_INSTANCE_IO_H_
#define BBB_INSTANCE_IO_H_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bbb/bibranch.h"

namespace bbb {

using Json = nlohmann::ordered_json;

// Instance file:
//   {"vertices": [{"id": "s", "side": "S", "b": 1}, ...],
//    "arcs": [{"tail": "s", "head": "t", "weight": "3/2"}, ...]}
// Weights are integers or "p/q" strings. Errors are InputError messages
// that start with a JSON pointer to the offending field.
Instance InstanceFromJson(const Json& doc);
Instance ParseInstance(const std::string& text);
Instance LoadInstance(const std::string& path);

// Canonical form: fields in file order, weights as strings.
Json InstanceToJson(const Instance& inst);
std::string SerializeInstance(const Instance& inst);

// {"arcs": [0, 2, ...]} with indices into the instance arc list.
ArcSet SolutionFromJson(const Instance& inst, const Json& doc);
ArcSet LoadSolution(const Instance& inst, const std::string& path);
Json SolutionToJson(const ArcSet& arcs);

// FNV-1a 64 of the canonical serialization, 16 hex digits.
std::string InstanceHash(const Instance& inst);

Json ArcsToJson(const ArcSet& arcs);
Json RationalsToJson(const std::vector<Rational>& values);
std::string ReadFile(const std::string& path);

}  // namespace bbb

#endif  // BBB_INSTANCE_IO_H_
