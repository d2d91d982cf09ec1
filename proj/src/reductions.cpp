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

#include "dupmatch/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupmatch {
namespace {

void require_on_grid(Value v, Value grid, const char* what) {
  if (!v.on_grid(grid) || v < Value()) {
    throw std::invalid_argument(std::string(what) +
                                " must be a nonnegative multiple of the grid");
  }
}

}  // namespace

Instance from_classic(const ClassicInstance& source, ClassicStability model,
                      std::span<const int> free_edges, Value grid) {
  if (!grid.is_finite() || grid <= Value()) {
    throw std::invalid_argument("grid step must be positive");
  }
  if (model.model != ClassicModel::kWeak) {
    if (!(model.margin > Value())) {
      throw std::invalid_argument("margin must be positive");
    }
    require_on_grid(model.margin, grid, "margin");
  }

  // In doubled units the grid step is 2*grid and a half step is `grid`.
  const Value half = grid;
  const Value full = grid * 2;
  const Value margin = model.margin * 2;
  Value gamma, delta;
  switch (model.model) {
    case ClassicModel::kWeak:
      gamma = half;
      delta = full;
      break;
    case ClassicModel::kDeltaMin:
      gamma = margin - half;
      delta = margin;
      break;
    case ClassicModel::kDeltaMax:
      gamma = half;
      delta = margin;
      break;
  }

  Instance out;
  out.u_count = source.u_count;
  out.w_count = source.w_count;
  for (std::size_t i = 0; i < source.edges.size(); ++i) {
    const ClassicEdge& src = source.edges[i];
    require_on_grid(src.p_u, grid, "preference");
    require_on_grid(src.p_w, grid, "preference");
    Edge e;
    e.id = static_cast<int>(i);
    e.u = src.u;
    e.w = src.w;
    e.p_u = src.p_u * 2;
    e.p_w = src.p_w * 2;
    e.gamma_u = e.gamma_w = gamma;
    e.delta_u = e.delta_w = delta;
    out.edges.push_back(e);
  }
  for (int id : free_edges) {
    if (id < 0 || id >= static_cast<int>(out.edges.size())) {
      throw std::invalid_argument("free edge id out of range");
    }
    Edge& e = out.edges[id];
    e.gamma_u = e.delta_u = e.gamma_w = e.delta_w = Value::infinity();
  }
  for (int id : source.critical_edges) {
    if (id < 0 || id >= static_cast<int>(out.edges.size())) {
      throw std::invalid_argument("critical edge id out of range");
    }
    out.edges[id].critical = true;
  }
  out.critical_vertices = source.critical_vertices;
  std::sort(out.critical_vertices.begin(), out.critical_vertices.end());
  out.critical_vertices.erase(
      std::unique(out.critical_vertices.begin(), out.critical_vertices.end()),
      out.critical_vertices.end());
  return out;
}

Instance from_weak_stability(const ClassicInstance& source, Value grid) {
  return from_classic(source, {ClassicModel::kWeak, Value()}, {}, grid);
}

Instance from_delta_min(const ClassicInstance& source, Value margin,
                        Value grid) {
  return from_classic(source, {ClassicModel::kDeltaMin, margin}, {}, grid);
}

Instance from_delta_max(const ClassicInstance& source, Value margin,
                        Value grid) {
  return from_classic(source, {ClassicModel::kDeltaMax, margin}, {}, grid);
}

Instance from_free_edges(const ClassicInstance& source,
                         std::span<const int> free_edges,
                         ClassicStability base, Value grid) {
  return from_classic(source, base, free_edges, grid);
}

}  // namespace dupmatch
