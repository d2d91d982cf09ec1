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

#include "dupmatch/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupmatch {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_params(const GeneratorParams& params) {
  if (params.u_count < 1 || params.w_count < 1) {
    throw std::invalid_argument("vertex counts must be positive");
  }
  if (params.edge_count < 1) {
    throw std::invalid_argument("edge_count must be at least 1");
  }
  if (params.p_max < 0) throw std::invalid_argument("p_max must be >= 0");
  if (params.capacity_max < 1) {
    throw std::invalid_argument("capacity_max must be at least 1");
  }
  for (double p : {params.crit_vertex_prob, params.crit_edge_prob,
                   params.free_edge_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
  }
}

Instance generate(std::uint64_t seed, const GeneratorParams& params) {
  check_params(params);
  std::mt19937_64 rng(seed);
  auto coin = [&rng](double p) { return uniform_unit(rng) < p; };

  Instance out;
  out.u_count = params.u_count;
  out.w_count = params.w_count;
  for (Side side : {Side::kU, Side::kW}) {
    for (int i = 0; i < out.vertex_count(side); ++i) {
      if (coin(params.crit_vertex_prob)) out.critical_vertices.push_back({side, i});
    }
  }

  // Thresholds live on the half-unit grid so ties with preference gaps occur.
  const std::uint64_t steps = 2 * static_cast<std::uint64_t>(std::max(1, params.p_max));
  const Value half = Value::from_raw(Value::kScale / 2);
  auto threshold_pair = [&](Edge& e, Side side) {
    const Value gamma = half * static_cast<std::int64_t>(1 + uniform_below(rng, steps));
    const Value delta =
        gamma + half * static_cast<std::int64_t>(1 + uniform_below(rng, steps));
    (side == Side::kU ? e.gamma_u : e.gamma_w) = gamma;
    (side == Side::kU ? e.delta_u : e.delta_w) = delta;
  };

  const auto p_bound = static_cast<std::uint64_t>(params.p_max) + 1;
  for (int id = 0; id < params.edge_count; ++id) {
    Edge e;
    e.id = id;
    e.u = static_cast<int>(uniform_below(rng, params.u_count));
    e.w = static_cast<int>(uniform_below(rng, params.w_count));
    e.p_u = Value::from_int(static_cast<std::int64_t>(uniform_below(rng, p_bound)));
    e.p_w = Value::from_int(static_cast<std::int64_t>(uniform_below(rng, p_bound)));
    threshold_pair(e, Side::kU);
    threshold_pair(e, Side::kW);
    if (coin(params.free_edge_prob)) {
      e.gamma_u = e.delta_u = e.gamma_w = e.delta_w = Value::infinity();
    }
    e.critical = coin(params.crit_edge_prob);
    out.edges.push_back(e);
  }

  if (params.capacity_max > 1) {
    for (Side side : {Side::kU, Side::kW}) {
      for (int i = 0; i < out.vertex_count(side); ++i) {
        const int q = 1 + static_cast<int>(uniform_below(
                              rng, static_cast<std::uint64_t>(params.capacity_max)));
        if (q != 1) out.constraints[{side, i}] = CapacitySpec{q};
      }
    }
  }
  return normalize(std::move(out));
}

}  // namespace dupmatch
