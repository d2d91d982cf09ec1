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

#ifndef DUPMATCH_MATROID_HPP_
#define DUPMATCH_MATROID_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dupmatch {

// Serializable matroid descriptions. Element ids are edge ids of the vertex
// the matroid belongs to.
struct CapacitySpec {
  int q = 1;
  friend bool operator==(const CapacitySpec&, const CapacitySpec&) = default;
};

struct LaminarSet {
  std::vector<int> edges;
  int quota = 0;
  friend bool operator==(const LaminarSet&, const LaminarSet&) = default;
};

// Independent iff |I ∩ S| <= quota(S) for every listed S. Elements outside
// every set are unconstrained.
struct LaminarSpec {
  std::vector<LaminarSet> sets;
  friend bool operator==(const LaminarSpec&, const LaminarSpec&) = default;
};

// The independent family is the downward closure of the listed sets, so
// either the bases or the full table may be given.
struct ExplicitSpec {
  std::vector<std::vector<int>> independent_sets;
  friend bool operator==(const ExplicitSpec&, const ExplicitSpec&) = default;
};

using MatroidSpec = std::variant<CapacitySpec, LaminarSpec, ExplicitSpec>;

// Largest ground set an explicit matroid may have; the axiom check is
// exponential in it.
inline constexpr std::size_t kMaxExplicitGround = 16;

// Problems with `spec` as a matroid over `ground`; empty when valid.
std::vector<std::string> check_matroid_spec(const MatroidSpec& spec,
                                            std::span<const int> ground);

// Membership test for a matroid over a finite ground set of integer ids.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  // Sorted, duplicate free.
  const std::vector<int>& ground() const { return ground_; }
  bool in_ground(int element) const;

  // `set` holds distinct elements in any order. A set that mentions an
  // element outside the ground is reported dependent.
  virtual bool independent(std::span<const int> set) const = 0;

 protected:
  explicit IndependenceOracle(std::vector<int> ground);

 private:
  std::vector<int> ground_;
};

using OraclePtr = std::shared_ptr<const IndependenceOracle>;

OraclePtr make_capacity_oracle(std::vector<int> ground, int q);
OraclePtr make_laminar_oracle(std::vector<int> ground,
                              std::vector<LaminarSet> sets);
OraclePtr make_explicit_oracle(std::vector<int> ground,
                               std::vector<std::vector<int>> independent_sets);
// Throws std::invalid_argument if `spec` fails check_matroid_spec.
OraclePtr make_oracle(const MatroidSpec& spec, std::vector<int> ground);

// Ground sets of `a` and `b` must be disjoint.
OraclePtr direct_sum(OraclePtr a, OraclePtr b);
OraclePtr truncate(OraclePtr a, int k);
OraclePtr deletion(OraclePtr a, std::span<const int> removed);
// Throws std::invalid_argument when `contracted` is dependent.
OraclePtr contraction(OraclePtr a, std::span<const int> contracted);

// Size of any base, found greedily.
int rank(const IndependenceOracle& oracle);

// The unique circuit of I + x, or nullopt when I + x is independent.
// Throws std::invalid_argument if I is dependent or already holds x.
std::optional<std::vector<int>> fundamental_circuit(
    const IndependenceOracle& oracle, std::span<const int> independent_set,
    int x);

// Greedy base for the total order `best_first`, which must list every
// ground element exactly once. The result keeps the order of `best_first`.
std::vector<int> optimal_base(const IndependenceOracle& oracle,
                              std::span<const int> best_first);

// Same greedy pass but restricted to the listed candidates, which need not
// cover the ground. Used by the kernel engine for choice functions.
std::vector<int> greedy_independent(const IndependenceOracle& oracle,
                                    std::span<const int> best_first);

}  // namespace dupmatch

#endif  // DUPMATCH_MATROID_HPP_
