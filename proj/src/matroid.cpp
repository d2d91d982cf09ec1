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

#include "dupmatch/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace dupmatch {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> sorted_copy(std::span<const int> s) {
  return std::vector<int>(s.begin(), s.end());
}

bool has_duplicates(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

bool all_in_ground(std::span<const int> set, const std::vector<int>& ground) {
  return std::all_of(set.begin(), set.end(), [&](int x) {
    return std::binary_search(ground.begin(), ground.end(), x);
  });
}

class CapacityOracle final : public IndependenceOracle {
 public:
  CapacityOracle(std::vector<int> ground, int q)
      : IndependenceOracle(std::move(ground)), q_(q) {}

  bool independent(std::span<const int> set) const override {
    if (std::ssize(set) > q_) return false;
    return all_in_ground(set, ground());
  }

 private:
  int q_;
};

class LaminarOracle final : public IndependenceOracle {
 public:
  LaminarOracle(std::vector<int> ground, std::vector<LaminarSet> sets)
      : IndependenceOracle(std::move(ground)) {
    for (auto& s : sets) {
      sets_.push_back({sorted_unique(std::move(s.edges)), s.quota});
    }
  }

  bool independent(std::span<const int> set) const override {
    if (!all_in_ground(set, ground())) return false;
    for (const auto& s : sets_) {
      int hits = 0;
      for (int x : set) {
        if (std::binary_search(s.edges.begin(), s.edges.end(), x)) ++hits;
      }
      if (hits > s.quota) return false;
    }
    return true;
  }

 private:
  std::vector<LaminarSet> sets_;
};

class ExplicitOracle final : public IndependenceOracle {
 public:
  ExplicitOracle(std::vector<int> ground,
                 std::vector<std::vector<int>> independent_sets)
      : IndependenceOracle(std::move(ground)) {
    for (auto& s : independent_sets) maximal_.push_back(sorted_unique(s));
  }

  bool independent(std::span<const int> set) const override {
    if (set.empty()) return true;
    std::vector<int> sorted = sorted_copy(set);
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const auto& m) {
      return std::includes(m.begin(), m.end(), sorted.begin(), sorted.end());
    });
  }

 private:
  std::vector<std::vector<int>> maximal_;
};

class DirectSumOracle final : public IndependenceOracle {
 public:
  DirectSumOracle(std::vector<int> ground, OraclePtr a, OraclePtr b)
      : IndependenceOracle(std::move(ground)),
        a_(std::move(a)),
        b_(std::move(b)) {}

  bool independent(std::span<const int> set) const override {
    std::vector<int> in_a, in_b;
    for (int x : set) {
      if (a_->in_ground(x)) {
        in_a.push_back(x);
      } else if (b_->in_ground(x)) {
        in_b.push_back(x);
      } else {
        return false;
      }
    }
    return a_->independent(in_a) && b_->independent(in_b);
  }

 private:
  OraclePtr a_, b_;
};

class TruncationOracle final : public IndependenceOracle {
 public:
  TruncationOracle(OraclePtr a, int k)
      : IndependenceOracle(a->ground()), a_(std::move(a)), k_(k) {}

  bool independent(std::span<const int> set) const override {
    return std::ssize(set) <= k_ && a_->independent(set);
  }

 private:
  OraclePtr a_;
  int k_;
};

class DeletionOracle final : public IndependenceOracle {
 public:
  DeletionOracle(std::vector<int> ground, OraclePtr a)
      : IndependenceOracle(std::move(ground)), a_(std::move(a)) {}

  bool independent(std::span<const int> set) const override {
    return all_in_ground(set, ground()) && a_->independent(set);
  }

 private:
  OraclePtr a_;
};

class ContractionOracle final : public IndependenceOracle {
 public:
  ContractionOracle(std::vector<int> ground, OraclePtr a,
                    std::vector<int> contracted)
      : IndependenceOracle(std::move(ground)),
        a_(std::move(a)),
        contracted_(std::move(contracted)) {}

  bool independent(std::span<const int> set) const override {
    if (!all_in_ground(set, ground())) return false;
    std::vector<int> joined(set.begin(), set.end());
    joined.insert(joined.end(), contracted_.begin(), contracted_.end());
    return a_->independent(joined);
  }

 private:
  OraclePtr a_;
  std::vector<int> contracted_;
};

// Rank-function test for a downward-closed family given by its generators.
// A hereditary family is a matroid iff r(X+a) + r(X+b) >= r(X+a+b) + r(X)
// for every X and a, b outside X.
bool explicit_family_is_matroid(const std::vector<int>& ground,
                                const std::vector<std::vector<int>>& sets) {
  const std::size_t n = ground.size();
  const std::uint32_t full = 1u << n;
  auto index_of = [&](int x) {
    return static_cast<std::size_t>(
        std::lower_bound(ground.begin(), ground.end(), x) - ground.begin());
  };
  std::vector<char> indep(full, 0);
  indep[0] = 1;
  for (const auto& s : sets) {
    std::uint32_t mask = 0;
    for (int x : s) mask |= 1u << index_of(x);
    indep[mask] = 1;
  }
  for (std::uint32_t mask = full; mask-- > 0;) {
    if (!indep[mask]) continue;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      indep[mask & ~(rest & -rest)] = 1;
    }
  }
  std::vector<int> r(full, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (indep[mask]) {
      r[mask] = std::popcount(mask);
      continue;
    }
    int best = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      best = std::max(best, r[mask & ~(rest & -rest)]);
    }
    r[mask] = best;
  }
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint32_t abit = 1u << a;
      if (mask & abit) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        const std::uint32_t bbit = 1u << b;
        if (mask & bbit) continue;
        if (r[mask | abit] + r[mask | bbit] < r[mask | abit | bbit] + r[mask]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

IndependenceOracle::IndependenceOracle(std::vector<int> ground)
    : ground_(sorted_unique(std::move(ground))) {}

bool IndependenceOracle::in_ground(int element) const {
  return std::binary_search(ground_.begin(), ground_.end(), element);
}

std::vector<std::string> check_matroid_spec(const MatroidSpec& spec,
                                            std::span<const int> ground_span) {
  std::vector<std::string> problems;
  if (const auto* cap = std::get_if<CapacitySpec>(&spec)) {
    if (cap->q < 0) problems.push_back("capacity must be nonnegative");
    return problems;
  }
  const std::vector<int> ground = sorted_unique(sorted_copy(ground_span));
  if (const auto* lam = std::get_if<LaminarSpec>(&spec)) {
    std::vector<std::vector<int>> sorted_sets;
    for (std::size_t i = 0; i < lam->sets.size(); ++i) {
      const auto& s = lam->sets[i];
      const std::string where = "laminar set " + std::to_string(i);
      if (s.quota < 0) problems.push_back(where + ": quota must be nonnegative");
      if (has_duplicates(s.edges)) {
        problems.push_back(where + ": repeated element");
      }
      if (!all_in_ground(s.edges, ground)) {
        problems.push_back(where + ": element not incident to the vertex");
      }
      sorted_sets.push_back(sorted_unique(s.edges));
    }
    for (std::size_t i = 0; i < sorted_sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted_sets.size(); ++j) {
        const auto& a = sorted_sets[i];
        const auto& b = sorted_sets[j];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (!common.empty() && common.size() != a.size() &&
            common.size() != b.size()) {
          problems.push_back("laminar sets " + std::to_string(i) + " and " +
                             std::to_string(j) +
                             " are neither nested nor disjoint");
        }
      }
    }
    return problems;
  }
  const auto& ex = std::get<ExplicitSpec>(spec);
  if (ground.size() > kMaxExplicitGround) {
    problems.push_back("explicit matroid ground set larger than " +
                       std::to_string(kMaxExplicitGround));
    return problems;
  }
  for (std::size_t i = 0; i < ex.independent_sets.size(); ++i) {
    const auto& s = ex.independent_sets[i];
    if (has_duplicates(s)) {
      problems.push_back("independent set " + std::to_string(i) +
                         ": repeated element");
    }
    if (!all_in_ground(s, ground)) {
      problems.push_back("independent set " + std::to_string(i) +
                         ": element not incident to the vertex");
    }
  }
  if (problems.empty()) {
    std::vector<std::vector<int>> sets;
    for (const auto& s : ex.independent_sets) sets.push_back(sorted_unique(s));
    if (!explicit_family_is_matroid(ground, sets)) {
      problems.push_back("explicit family violates the exchange axiom");
    }
  }
  return problems;
}

OraclePtr make_capacity_oracle(std::vector<int> ground, int q) {
  return std::make_shared<CapacityOracle>(std::move(ground), q);
}

OraclePtr make_laminar_oracle(std::vector<int> ground,
                              std::vector<LaminarSet> sets) {
  return std::make_shared<LaminarOracle>(std::move(ground), std::move(sets));
}

OraclePtr make_explicit_oracle(std::vector<int> ground,
                               std::vector<std::vector<int>> independent_sets) {
  return std::make_shared<ExplicitOracle>(std::move(ground),
                                          std::move(independent_sets));
}

OraclePtr make_oracle(const MatroidSpec& spec, std::vector<int> ground) {
  const auto problems = check_matroid_spec(spec, ground);
  if (!problems.empty()) throw std::invalid_argument(problems.front());
  if (const auto* cap = std::get_if<CapacitySpec>(&spec)) {
    return make_capacity_oracle(std::move(ground), cap->q);
  }
  if (const auto* lam = std::get_if<LaminarSpec>(&spec)) {
    return make_laminar_oracle(std::move(ground), lam->sets);
  }
  return make_explicit_oracle(std::move(ground),
                              std::get<ExplicitSpec>(spec).independent_sets);
}

OraclePtr direct_sum(OraclePtr a, OraclePtr b) {
  std::vector<int> ground = a->ground();
  for (int x : b->ground()) {
    if (a->in_ground(x)) {
      throw std::invalid_argument("direct sum needs disjoint ground sets");
    }
    ground.push_back(x);
  }
  return std::make_shared<DirectSumOracle>(std::move(ground), std::move(a),
                                           std::move(b));
}

OraclePtr truncate(OraclePtr a, int k) {
  if (k < 0) throw std::invalid_argument("truncation size must be >= 0");
  return std::make_shared<TruncationOracle>(std::move(a), k);
}

OraclePtr deletion(OraclePtr a, std::span<const int> removed) {
  std::vector<int> drop = sorted_unique(sorted_copy(removed));
  std::vector<int> ground;
  std::set_difference(a->ground().begin(), a->ground().end(), drop.begin(),
                      drop.end(), std::back_inserter(ground));
  return std::make_shared<DeletionOracle>(std::move(ground), std::move(a));
}

OraclePtr contraction(OraclePtr a, std::span<const int> contracted) {
  if (!a->independent(contracted)) {
    throw std::invalid_argument("can only contract an independent set");
  }
  std::vector<int> drop = sorted_unique(sorted_copy(contracted));
  std::vector<int> ground;
  std::set_difference(a->ground().begin(), a->ground().end(), drop.begin(),
                      drop.end(), std::back_inserter(ground));
  return std::make_shared<ContractionOracle>(std::move(ground), std::move(a),
                                             std::move(drop));
}

int rank(const IndependenceOracle& oracle) {
  return static_cast<int>(greedy_independent(oracle, oracle.ground()).size());
}

std::optional<std::vector<int>> fundamental_circuit(
    const IndependenceOracle& oracle, std::span<const int> independent_set,
    int x) {
  if (!oracle.independent(independent_set)) {
    throw std::invalid_argument("fundamental circuit of a dependent set");
  }
  if (std::find(independent_set.begin(), independent_set.end(), x) !=
      independent_set.end()) {
    throw std::invalid_argument("element already in the independent set");
  }
  std::vector<int> probe(independent_set.begin(), independent_set.end());
  probe.push_back(x);
  if (oracle.independent(probe)) return std::nullopt;
  // y lies on the circuit iff dropping it from I + x restores independence.
  std::vector<int> circuit{x};
  for (std::size_t i = 0; i + 1 < probe.size(); ++i) {
    std::vector<int> without = probe;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (oracle.independent(without)) circuit.push_back(probe[i]);
  }
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

std::vector<int> greedy_independent(const IndependenceOracle& oracle,
                                    std::span<const int> best_first) {
  std::vector<int> chosen;
  for (int x : best_first) {
    chosen.push_back(x);
    if (!oracle.independent(chosen)) chosen.pop_back();
  }
  return chosen;
}

std::vector<int> optimal_base(const IndependenceOracle& oracle,
                              std::span<const int> best_first) {
  if (sorted_unique(sorted_copy(best_first)) != oracle.ground() ||
      best_first.size() != oracle.ground().size()) {
    throw std::invalid_argument("order must list every ground element once");
  }
  return greedy_independent(oracle, best_first);
}

}  // namespace dupmatch
