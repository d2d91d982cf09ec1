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

#include "dupmatch/solver.hpp"

#include <stdexcept>

#include "dupmatch/engine_gs.hpp"
#include "dupmatch/engine_kernel.hpp"

namespace dupmatch {

EngineChoice parse_engine(const std::string& name) {
  if (name == "auto") return EngineChoice::kAuto;
  if (name == "gs") return EngineChoice::kGs;
  if (name == "kernel") return EngineChoice::kKernel;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

ConstructionChoice parse_construction(const std::string& name) {
  if (name == "auto") return ConstructionChoice::kAuto;
  if (name == "simple") return ConstructionChoice::kSimple;
  if (name == "general") return ConstructionChoice::kGeneral;
  throw std::invalid_argument("unknown construction '" + name + "'");
}

std::string to_string(EngineChoice engine) {
  switch (engine) {
    case EngineChoice::kAuto:
      return "auto";
    case EngineChoice::kGs:
      return "gs";
    case EngineChoice::kKernel:
      return "kernel";
  }
  return "?";
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  require_valid(instance);
  const Instance normalized = normalize(instance);

  SolveResult result;
  switch (options.construction) {
    case ConstructionChoice::kAuto:
      result.construction = admits_simple(normalized) ? Construction::kSimple
                                                      : Construction::kGeneral;
      break;
    case ConstructionChoice::kSimple:
      result.construction = Construction::kSimple;
      break;
    case ConstructionChoice::kGeneral:
      result.construction = Construction::kGeneral;
      break;
  }
  result.engine = options.engine;
  if (result.engine == EngineChoice::kAuto) {
    result.engine = normalized.is_one_to_one() ? EngineChoice::kGs
                                               : EngineChoice::kKernel;
  }

  result.extended = result.construction == Construction::kSimple
                        ? build_simple(normalized)
                        : build_general(normalized);
  const std::vector<int> copies = result.engine == EngineChoice::kGs
                                      ? solve_gs(result.extended)
                                      : solve_kernel(result.extended);
  result.matching = project(result.extended, copies);
  result.criticality_score =
      criticality_score_unchecked(normalized, result.matching.edge_ids);
  return result;
}

nlohmann::json solve_report_json(const SolveResult& result) {
  return {{"matching", result.matching.edge_ids},
          {"size", result.matching.size()},
          {"criticality_score", result.criticality_score},
          {"extended_copy_count", result.extended.copies.size()},
          {"engine", to_string(result.engine)},
          {"construction", to_string(result.construction)}};
}

}  // namespace dupmatch
