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

#ifndef DUPMATCH_GENERATOR_HPP_
#define DUPMATCH_GENERATOR_HPP_

#include <cstdint>
#include <random>

#include "dupmatch/instance.hpp"

namespace dupmatch {

struct GeneratorParams {
  int u_count = 4;
  int w_count = 4;
  int edge_count = 9;
  // Preferences are integers drawn from [0, p_max].
  int p_max = 3;
  double crit_vertex_prob = 0.3;
  double crit_edge_prob = 0.5;
  // Vertex capacities are drawn from [1, capacity_max].
  int capacity_max = 1;
  // Probability that an edge is free (infinite thresholds on both sides).
  double free_edge_prob = 0.1;
};

// Throws std::invalid_argument for out-of-range parameters.
void check_params(const GeneratorParams& params);

// Deterministic in (seed, params) on every platform: the engine is the
// standard-specified mt19937_64 and all draws go through the bounded helpers
// below instead of <random> distributions.
Instance generate(std::uint64_t seed, const GeneratorParams& params);

// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace dupmatch

#endif  // DUPMATCH_GENERATOR_HPP_
