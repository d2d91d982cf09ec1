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

#include "dupmatch/engine_gs.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dupmatch {

GsRun run_gs(const ExtendedInstance& ext, std::span<const int> proposer_order) {
  if (!ext.unit_capacity) {
    throw std::invalid_argument(
        "deferred acceptance engine needs unit capacities");
  }
  const std::size_t u_count = ext.order_u.size();
  const std::size_t w_count = ext.order_w.size();

  // position[c] = rank of copy c in its W endpoint's list (0 = best).
  std::vector<int> position(ext.copies.size(), 0);
  for (std::size_t w = 0; w < w_count; ++w) {
    const auto& order = ext.order_w[w];
    for (std::size_t k = 0; k < order.size(); ++k) {
      position[order[k]] = static_cast<int>(k);
    }
  }

  std::vector<std::size_t> cursor(u_count, 0);
  std::vector<int> held(w_count, -1);
  std::deque<int> queue;
  if (proposer_order.empty()) {
    for (std::size_t u = 0; u < u_count; ++u) queue.push_back(static_cast<int>(u));
  } else {
    queue.assign(proposer_order.begin(), proposer_order.end());
  }

  GsRun run;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const auto& prefs = ext.order_u.at(u);
    while (cursor[u] < prefs.size()) {
      const int copy = prefs[cursor[u]++];
      const int w = ext.copies[copy].w;
      ++run.proposals;
      const int current = held[w];
      if (current == -1) {
        held[w] = copy;
        break;
      }
      if (position[copy] < position[current]) {
        held[w] = copy;
        queue.push_back(ext.copies[current].u);
        break;
      }
    }
  }

  for (int copy : held) {
    if (copy != -1) run.matched.push_back(copy);
  }
  std::sort(run.matched.begin(), run.matched.end());
  return run;
}

std::vector<int> solve_gs(const ExtendedInstance& ext) {
  return run_gs(ext).matched;
}

Matching project(const ExtendedInstance& ext, std::span<const int> copies) {
  std::vector<int> edges;
  edges.reserve(copies.size());
  for (int copy : copies) edges.push_back(ext.orig(copy));
  return make_matching(std::move(edges));
}

}  // namespace dupmatch
