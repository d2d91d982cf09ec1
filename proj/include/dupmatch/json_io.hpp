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

#ifndef DUPMATCH_JSON_IO_HPP_
#define DUPMATCH_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "dupmatch/instance.hpp"

namespace dupmatch {

// Canonical instance JSON: object keys sorted, edges by id, numbers as
// decimal strings ("inf" for infinite thresholds).
nlohmann::json instance_to_json(const Instance& instance);
std::string serialize_instance(const Instance& instance);

// Structural parsing only; call validate() for semantic checks. Throws
// std::invalid_argument on malformed input.
Instance instance_from_json(const nlohmann::json& j);
Instance parse_instance(const std::string& text);

nlohmann::json matroid_spec_to_json(const MatroidSpec& spec);
MatroidSpec matroid_spec_from_json(const nlohmann::json& j);

// Accepts a bare id array, {"edge_ids": [...]} or a solve report carrying
// "matching".
Matching matching_from_json(const nlohmann::json& j);

// Pretty-printed with a trailing newline; the single place that fixes the
// on-disk layout.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace dupmatch

#endif  // DUPMATCH_JSON_IO_HPP_
