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

#ifndef DUPMATCH_ENGINE_GS_HPP_
#define DUPMATCH_ENGINE_GS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dupmatch/extension.hpp"
#include "dupmatch/instance.hpp"

namespace dupmatch {

struct GsRun {
  std::vector<int> matched;  // copy ids, ascending
  std::size_t proposals = 0;
};

// U-proposing deferred acceptance over the copies of a unit-capacity
// extended instance. `proposer_order` seeds the work queue; empty means
// U vertices in index order. Throws std::invalid_argument for non-unit
// capacities.
GsRun run_gs(const ExtendedInstance& ext,
             std::span<const int> proposer_order = {});

// The U-optimal stable matching of the copies.
std::vector<int> solve_gs(const ExtendedInstance& ext);

// Original edges behind the given copies.
Matching project(const ExtendedInstance& ext, std::span<const int> copies);

}  // namespace dupmatch

#endif  // DUPMATCH_ENGINE_GS_HPP_
