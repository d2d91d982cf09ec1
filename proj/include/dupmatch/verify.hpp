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

#ifndef DUPMATCH_VERIFY_HPP_
#define DUPMATCH_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dupmatch/extension.hpp"
#include "dupmatch/generator.hpp"
#include "dupmatch/instance.hpp"
#include "dupmatch/reductions.hpp"

namespace dupmatch {

// Exhaustive checks below enumerate all 2^|E| edge subsets.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CapExceeded when the instance has more than `cap` edges.
void check_cap(const Instance& instance, std::size_t cap);

// Every matching (one-to-one) or common independent set (matroidal), in
// increasing order of the subset bitmask with bit i = edge i.
std::vector<Matching> enumerate_feasible(const Instance& instance,
                                         std::size_t cap = kDefaultEnumerationCap);

int criticality_optimum(const Instance& instance,
                        std::size_t cap = kDefaultEnumerationCap);

// Edge `edge` with the dropped partners; nullopt stands for the empty slot.
struct BlockingWitness {
  int edge = 0;
  std::optional<int> f;  // dropped at the U endpoint
  std::optional<int> g;  // dropped at the W endpoint

  friend bool operator==(const BlockingWitness&, const BlockingWitness&) = default;
};

struct Certificate {
  bool feasible = false;
  int criticality_score = 0;
  int criticality_optimum = 0;
  std::vector<BlockingWitness> blocking_edges;
  bool is_critical = false;
  bool is_cgamma_stable = false;
};

nlohmann::json certificate_to_json(const Certificate& cert);

// Brute-force verifier for one instance. Computes the criticality optimum
// once; the queries reuse it.
class Verifier {
 public:
  explicit Verifier(const Instance& instance,
                    std::size_t cap = kDefaultEnumerationCap);
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  const Instance& instance() const { return instance_; }
  int optimum() const { return optimum_; }
  bool feasible(const Matching& m) const { return matroids_.feasible(m); }

  // Searches f in M(u) ∪ {∅} and g in M(w) ∪ {∅} (empty slot first, then
  // ascending ids) for a swap that keeps both sides independent, clears one
  // of the two threshold combinations and keeps the criticality score at
  // the optimum. `m` must be feasible and must not contain `edge`.
  std::optional<BlockingWitness> blocks(const Matching& m, int edge) const;

  // Blocking edges are listed for every feasible matching, critical or not.
  Certificate certify(const Matching& m) const;

 private:
  Instance instance_;
  VertexMatroids matroids_;
  int optimum_ = 0;
};

std::optional<BlockingWitness> cgamma_blocks(const Instance& instance,
                                             const Matching& m, int edge,
                                             int optimum);

Certificate certify(const Instance& instance, const Matching& m,
                    std::size_t cap = kDefaultEnumerationCap);

struct StableOptimum {
  int size = 0;
  Matching witness;
};

// Largest cγ-stable matching; among equal sizes the first in enumeration
// order. nullopt only if no feasible matching is cγ-stable.
std::optional<StableOptimum> max_cgamma_stable(
    const Instance& instance, std::size_t cap = kDefaultEnumerationCap);

// Blocking test of a classic one-to-one model, evaluated straight from its
// definition: both agents strictly improve (p(∅) = 0), the model's margin
// condition holds, the edge is not free, and swapping it in keeps the
// criticality score at `optimum`.
bool classic_blocks(const ClassicInstance& source, ClassicStability model,
                    std::span<const int> free_edges, const Matching& m,
                    int edge, int optimum);

// Copies outside `matched` that are undominated at both endpoints. A copy
// is dominated at v when M'(v) + copy is dependent in v's extended matroid
// and every other member of the fundamental circuit is ranked above it.
std::vector<int> extended_blocking_copies(const ExtendedInstance& ext,
                                          std::span<const int> matched);

bool is_common_independent(const ExtendedInstance& ext,
                           std::span<const int> matched);

// True when no further copy can be added keeping common independence.
bool is_maximal_common_independent(const ExtendedInstance& ext,
                                   std::span<const int> matched);

struct RatioReport {
  std::uint64_t seed = 0;
  int edge_count = 0;
  int alg_size = 0;
  int opt_stable_size = 0;
  bool ratio_ok = false;  // 2 * opt <= 3 * alg
  bool is_critical = false;
  bool is_cgamma_stable = false;
  bool engines_agree = true;  // only compared for unit capacities
  bool opt_found = false;
  std::string engine;
  std::string construction;

  bool ok() const {
    return ratio_ok && is_critical && is_cgamma_stable && engines_agree &&
           opt_found;
  }
};

nlohmann::json ratio_report_to_json(const RatioReport& report);

// Solves, certifies and compares against the brute-force optimum.
RatioReport check_instance(const Instance& instance,
                           std::size_t cap = kDefaultEnumerationCap);

struct RatioOptions {
  std::uint64_t first_seed = 0;
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One report per seed first_seed, first_seed + 1, ..., in seed order.
// Throws CapExceeded when params.edge_count exceeds the cap.
std::vector<RatioReport> ratio_harness(std::size_t seed_count,
                                       const GeneratorParams& params,
                                       const RatioOptions& options = {});

// Greedily drops edges while `still_fails` holds.
Instance minimize_failure(Instance instance,
                          const std::function<bool(const Instance&)>& still_fails);

}  // namespace dupmatch

#endif  // DUPMATCH_VERIFY_HPP_
