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

#ifndef DUPMATCH_REDUCTIONS_HPP_
#define DUPMATCH_REDUCTIONS_HPP_

#include <span>
#include <vector>

#include "dupmatch/instance.hpp"

namespace dupmatch {

// A one-to-one market with plain preference values and no thresholds.
struct ClassicEdge {
  int u = 0;
  int w = 0;
  Value p_u, p_w;
};

struct ClassicInstance {
  int u_count = 0;
  int w_count = 0;
  std::vector<ClassicEdge> edges;  // edge id = position
  std::vector<VertexRef> critical_vertices;
  std::vector<int> critical_edges;
};

enum class ClassicModel { kWeak, kDeltaMin, kDeltaMax };

// Blocking rule of a classic model. `margin` is the Δ of the Δ-min and
// Δ-max models and is ignored for weak stability.
struct ClassicStability {
  ClassicModel model = ClassicModel::kWeak;
  Value margin;
};

// Default grid: one micro-unit, the finest the value type represents.
inline constexpr Value kFinestGrid = Value::from_raw(1);

// The constructors below emit an instance whose cγ-blocking predicate equals
// the source model's blocking predicate for every matching and edge. The
// thresholds need half-grid steps, so every preference value is doubled in
// the output; blocking only compares differences, so nothing else changes.
//
// Preferences and margins must be nonnegative multiples of `grid`; margins
// must be positive. Violations throw std::invalid_argument.
Instance from_weak_stability(const ClassicInstance& source,
                             Value grid = kFinestGrid);
Instance from_delta_min(const ClassicInstance& source, Value margin,
                        Value grid = kFinestGrid);
Instance from_delta_max(const ClassicInstance& source, Value margin,
                        Value grid = kFinestGrid);
// Edges listed in `free_edges` get infinite thresholds; the rest follow
// `base`.
Instance from_free_edges(const ClassicInstance& source,
                         std::span<const int> free_edges,
                         ClassicStability base = {},
                         Value grid = kFinestGrid);

Instance from_classic(const ClassicInstance& source, ClassicStability model,
                      std::span<const int> free_edges = {},
                      Value grid = kFinestGrid);

}  // namespace dupmatch

#endif  // DUPMATCH_REDUCTIONS_HPP_
