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

#ifndef DUPMATCH_SOLVER_HPP_
#define DUPMATCH_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "dupmatch/extension.hpp"
#include "dupmatch/instance.hpp"

namespace dupmatch {

enum class EngineChoice { kAuto, kGs, kKernel };
enum class ConstructionChoice { kAuto, kSimple, kGeneral };

EngineChoice parse_engine(const std::string& name);
ConstructionChoice parse_construction(const std::string& name);

struct SolveOptions {
  EngineChoice engine = EngineChoice::kAuto;
  ConstructionChoice construction = ConstructionChoice::kAuto;
};

struct SolveResult {
  Matching matching;
  int criticality_score = 0;
  EngineChoice engine = EngineChoice::kGs;  // never kAuto
  Construction construction = Construction::kSimple;
  ExtendedInstance extended;
};

std::string to_string(EngineChoice engine);

// validate -> normalize -> extend -> solve -> project.
//
// The automatic engine is deferred acceptance when every capacity is 1 and
// the kernel engine otherwise; the automatic construction is the simple one
// when admits_simple holds after normalization. Throws ValidationError for
// invalid instances and std::invalid_argument when a forced engine or
// construction does not fit the instance.
SolveResult solve(const Instance& instance, const SolveOptions& options = {});

// Report body shared by the CLI and the tests: matching, size,
// criticality_score, extended_copy_count, engine, construction.
nlohmann::json solve_report_json(const SolveResult& result);

}  // namespace dupmatch

#endif  // DUPMATCH_SOLVER_HPP_
