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

#ifndef DUPMATCH_INSTANCE_HPP_
#define DUPMATCH_INSTANCE_HPP_

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dupmatch/matroid.hpp"
#include "dupmatch/value.hpp"

namespace dupmatch {

enum class Side : unsigned char { kU, kW };

inline constexpr Side other(Side s) { return s == Side::kU ? Side::kW : Side::kU; }

struct VertexRef {
  Side side = Side::kU;
  int index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// "U:3" / "W:0".
std::string to_string(VertexRef v);
VertexRef parse_vertex_ref(const std::string& text);

// Preference of an agent for being unmatched. Any value <= 0 is admissible;
// zero is the one used throughout.
inline constexpr Value kUnmatchedPreference = Value();

struct Edge {
  int id = 0;
  int u = 0;
  int w = 0;
  Value p_u, p_w;
  Value gamma_u, delta_u, gamma_w, delta_w;
  bool critical = false;

  Value p(Side s) const { return s == Side::kU ? p_u : p_w; }
  Value gamma(Side s) const { return s == Side::kU ? gamma_u : gamma_w; }
  Value delta(Side s) const { return s == Side::kU ? delta_u : delta_w; }
  int endpoint(Side s) const { return s == Side::kU ? u : w; }
  VertexRef vertex(Side s) const { return {s, endpoint(s)}; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Bipartite multigraph with per-endpoint preferences and thresholds.
// edges[i].id == i for every valid instance.
struct Instance {
  int u_count = 0;
  int w_count = 0;
  std::vector<Edge> edges;
  std::vector<VertexRef> critical_vertices;  // sorted, unique
  std::map<VertexRef, MatroidSpec> constraints;  // absent = capacity 1

  int vertex_count(Side s) const { return s == Side::kU ? u_count : w_count; }
  bool is_critical(VertexRef v) const;
  // Edge ids incident to v, ascending.
  std::vector<int> incident(VertexRef v) const;
  const MatroidSpec& constraint(VertexRef v) const;
  // True when every vertex has the default capacity-1 constraint.
  bool is_one_to_one() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Sorted edge ids.
struct Matching {
  std::vector<int> edge_ids;

  std::size_t size() const { return edge_ids.size(); }
  bool contains(int id) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

Matching make_matching(std::vector<int> edge_ids);

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Raised by operations that require a valid instance.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const Instance& instance);

// Throws ValidationError unless validate(instance) is clean.
void require_valid(const Instance& instance);

// Critical edges without a critical endpoint become non-critical.
Instance normalize(Instance instance);

// Per-vertex independence oracles over incident edge ids, built once so
// repeated feasibility checks stay cheap.
class VertexMatroids {
 public:
  explicit VertexMatroids(const Instance& instance);

  const IndependenceOracle& at(VertexRef v) const;
  // M(v) for the given matching, ascending.
  std::vector<int> restrict_to(VertexRef v, const Matching& m) const;
  bool feasible(const Matching& m) const;
  // Sum of matroid ranks over the critical vertices of one side.
  int critical_rank_sum(Side side) const;

 private:
  const Instance* instance_;
  std::vector<OraclePtr> u_, w_;
};

bool is_feasible(const Instance& instance, const Matching& m);

// Sum over critical vertices v of |M(v) ∩ E_c|. Throws
// std::invalid_argument for an infeasible matching.
int criticality_score(const Instance& instance, const Matching& m);

// Score without the feasibility check; callers vouch for `m`.
int criticality_score_unchecked(const Instance& instance,
                                std::span<const int> edge_ids);

// Copy of `instance` without edge `id`; later ids shift down by one and
// constraint specs are rewritten accordingly.
Instance remove_edge(const Instance& instance, int id);

}  // namespace dupmatch

#endif  // DUPMATCH_INSTANCE_HPP_
