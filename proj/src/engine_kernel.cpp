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

#include "dupmatch/engine_kernel.hpp"

#include <algorithm>

namespace dupmatch {
namespace {

// Greedy pass over `order`, skipping copies rejected by `eligible`.
template <typename Eligible>
std::vector<int> greedy_choice(const IndependenceOracle& oracle,
                               const std::vector<int>& order,
                               Eligible eligible, std::size_t& calls) {
  std::vector<int> chosen;
  for (int copy : order) {
    if (!eligible(copy)) continue;
    chosen.push_back(copy);
    ++calls;
    if (!oracle.independent(chosen)) chosen.pop_back();
  }
  return chosen;
}

}  // namespace

KernelRun run_kernel(const ExtendedInstance& ext) {
  const std::size_t n = ext.copies.size();
  const std::size_t u_count = ext.order_u.size();
  const std::size_t w_count = ext.order_w.size();

  std::vector<char> available(n, 1);
  std::vector<char> offered(n, 0);
  std::vector<std::vector<int>> offers_by_u(u_count);
  std::vector<char> u_dirty(u_count, 1);
  std::vector<char> w_dirty(w_count, 0);

  KernelRun run;
  for (;;) {
    ++run.rounds;
    for (std::size_t u = 0; u < u_count; ++u) {
      if (!u_dirty[u]) continue;
      u_dirty[u] = 0;
      std::vector<int> choice = greedy_choice(
          *ext.matroid_u[u], ext.order_u[u],
          [&](int c) { return available[c] != 0; }, run.oracle_calls);
      // Withdrawn offers (none arise for matroids, but the bookkeeping stays
      // exact either way) and new offers both disturb the W endpoint.
      for (int c : offers_by_u[u]) {
        if (std::find(choice.begin(), choice.end(), c) == choice.end()) {
          offered[c] = 0;
          w_dirty[ext.copies[c].w] = 1;
        }
      }
      for (int c : choice) {
        if (!offered[c]) {
          offered[c] = 1;
          w_dirty[ext.copies[c].w] = 1;
        }
      }
      offers_by_u[u] = std::move(choice);
    }

    bool removed = false;
    for (std::size_t w = 0; w < w_count; ++w) {
      if (!w_dirty[w]) continue;
      w_dirty[w] = 0;
      const auto& order = ext.order_w[w];
      std::vector<int> kept = greedy_choice(
          *ext.matroid_w[w], order, [&](int c) { return offered[c] != 0; },
          run.oracle_calls);
      std::sort(kept.begin(), kept.end());
      for (int c : order) {
        if (offered[c] && !std::binary_search(kept.begin(), kept.end(), c)) {
          offered[c] = 0;
          available[c] = 0;
          u_dirty[ext.copies[c].u] = 1;
          removed = true;
        }
      }
    }
    if (!removed) break;
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (offered[c]) run.matched.push_back(static_cast<int>(c));
  }
  return run;
}

std::vector<int> solve_kernel(const ExtendedInstance& ext) {
  return run_kernel(ext).matched;
}

}  // namespace dupmatch
