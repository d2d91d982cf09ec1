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

#include "dupmatch/instance.hpp"

#include <algorithm>
#include <variant>

namespace dupmatch {
namespace {

const MatroidSpec kDefaultConstraint = CapacitySpec{1};

std::string edge_label(const Edge& e) { return "edge " + std::to_string(e.id); }

void check_thresholds(const Edge& e, Side side,
                      std::vector<std::string>& out) {
  const char* tag = side == Side::kU ? " (U side)" : " (W side)";
  const Value gamma = e.gamma(side);
  const Value delta = e.delta(side);
  if (gamma.is_neg_infinity() || delta.is_neg_infinity()) {
    out.push_back(edge_label(e) + ": thresholds cannot be -inf" + tag);
    return;
  }
  if (!(gamma > Value())) {
    out.push_back(edge_label(e) + ": gamma must be positive" + tag);
  }
  const bool both_infinite = gamma.is_infinity() && delta.is_infinity();
  if (!both_infinite && !(gamma < delta)) {
    out.push_back(edge_label(e) + ": gamma < delta required" + tag);
  }
}

}  // namespace

std::string to_string(VertexRef v) {
  return (v.side == Side::kU ? "U:" : "W:") + std::to_string(v.index);
}

VertexRef parse_vertex_ref(const std::string& text) {
  if (text.size() < 3 || (text[0] != 'U' && text[0] != 'W') || text[1] != ':') {
    throw std::invalid_argument("bad vertex reference '" + text + "'");
  }
  const std::string digits = text.substr(2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("bad vertex reference '" + text + "'");
  }
  return {text[0] == 'U' ? Side::kU : Side::kW, std::stoi(digits)};
}

bool Instance::is_critical(VertexRef v) const {
  return std::binary_search(critical_vertices.begin(), critical_vertices.end(),
                            v);
}

std::vector<int> Instance::incident(VertexRef v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.endpoint(v.side) == v.index) out.push_back(e.id);
  }
  return out;
}

const MatroidSpec& Instance::constraint(VertexRef v) const {
  auto it = constraints.find(v);
  return it == constraints.end() ? kDefaultConstraint : it->second;
}

bool Instance::is_one_to_one() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const auto& kv) {
    const auto* cap = std::get_if<CapacitySpec>(&kv.second);
    return cap != nullptr && cap->q == 1;
  });
}

bool Matching::contains(int id) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
}

Matching make_matching(std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  return Matching{std::move(edge_ids)};
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report.violations.empty()
                             ? std::string("invalid instance")
                             : "invalid instance: " + report.violations.front()),
      report_(std::move(report)) {}

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  auto& out = report.violations;
  if (instance.u_count < 0 || instance.w_count < 0) {
    out.push_back("vertex counts must be nonnegative");
  }
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const Edge& e = instance.edges[i];
    if (e.id != static_cast<int>(i)) {
      out.push_back("edge ids must be dense and listed in order (position " +
                    std::to_string(i) + " has id " + std::to_string(e.id) + ")");
    }
    if (e.u < 0 || e.u >= instance.u_count || e.w < 0 ||
        e.w >= instance.w_count) {
      out.push_back(edge_label(e) + ": endpoint out of range");
    }
    for (Side side : {Side::kU, Side::kW}) {
      if (!e.p(side).is_finite() || e.p(side) < Value()) {
        out.push_back(edge_label(e) + ": preferences nonnegative and finite");
      }
      check_thresholds(e, side, out);
    }
  }
  for (std::size_t i = 0; i < instance.critical_vertices.size(); ++i) {
    const VertexRef v = instance.critical_vertices[i];
    if (v.index < 0 || v.index >= instance.vertex_count(v.side)) {
      out.push_back("critical vertex " + to_string(v) + " out of range");
    }
    if (i > 0 && !(instance.critical_vertices[i - 1] < v)) {
      out.push_back("critical vertices must be sorted and unique");
    }
  }
  for (const auto& [v, spec] : instance.constraints) {
    if (v.index < 0 || v.index >= instance.vertex_count(v.side)) {
      out.push_back("constraint on " + to_string(v) + ": vertex out of range");
      continue;
    }
    for (const auto& problem : check_matroid_spec(spec, instance.incident(v))) {
      out.push_back("constraint on " + to_string(v) + ": " + problem);
    }
  }
  return report;
}

void require_valid(const Instance& instance) {
  auto report = validate(instance);
  if (!report.ok()) throw ValidationError(std::move(report));
}

Instance normalize(Instance instance) {
  for (auto& e : instance.edges) {
    if (e.critical && !instance.is_critical({Side::kU, e.u}) &&
        !instance.is_critical({Side::kW, e.w})) {
      e.critical = false;
    }
  }
  return instance;
}

VertexMatroids::VertexMatroids(const Instance& instance)
    : instance_(&instance) {
  for (Side side : {Side::kU, Side::kW}) {
    auto& slot = side == Side::kU ? u_ : w_;
    std::vector<std::vector<int>> incident(instance.vertex_count(side));
    for (const auto& e : instance.edges) {
      incident[e.endpoint(side)].push_back(e.id);
    }
    for (int i = 0; i < instance.vertex_count(side); ++i) {
      slot.push_back(make_oracle(instance.constraint({side, i}),
                                 std::move(incident[i])));
    }
  }
}

const IndependenceOracle& VertexMatroids::at(VertexRef v) const {
  return v.side == Side::kU ? *u_.at(v.index) : *w_.at(v.index);
}

std::vector<int> VertexMatroids::restrict_to(VertexRef v,
                                             const Matching& m) const {
  std::vector<int> out;
  for (int id : m.edge_ids) {
    if (instance_->edges[id].endpoint(v.side) == v.index) out.push_back(id);
  }
  return out;
}

bool VertexMatroids::feasible(const Matching& m) const {
  const int n = static_cast<int>(instance_->edges.size());
  for (std::size_t i = 0; i < m.edge_ids.size(); ++i) {
    if (m.edge_ids[i] < 0 || m.edge_ids[i] >= n) return false;
    if (i > 0 && m.edge_ids[i - 1] >= m.edge_ids[i]) return false;
  }
  for (Side side : {Side::kU, Side::kW}) {
    std::vector<std::vector<int>> parts(instance_->vertex_count(side));
    for (int id : m.edge_ids) {
      parts[instance_->edges[id].endpoint(side)].push_back(id);
    }
    for (int i = 0; i < instance_->vertex_count(side); ++i) {
      if (!parts[i].empty() && !at({side, i}).independent(parts[i])) {
        return false;
      }
    }
  }
  return true;
}

int VertexMatroids::critical_rank_sum(Side side) const {
  int sum = 0;
  for (const auto& v : instance_->critical_vertices) {
    if (v.side == side) sum += rank(at(v));
  }
  return sum;
}

bool is_feasible(const Instance& instance, const Matching& m) {
  return VertexMatroids(instance).feasible(m);
}

int criticality_score_unchecked(const Instance& instance,
                                std::span<const int> edge_ids) {
  int score = 0;
  for (int id : edge_ids) {
    const Edge& e = instance.edges[id];
    if (!e.critical) continue;
    if (instance.is_critical({Side::kU, e.u})) ++score;
    if (instance.is_critical({Side::kW, e.w})) ++score;
  }
  return score;
}

int criticality_score(const Instance& instance, const Matching& m) {
  if (!is_feasible(instance, m)) {
    throw std::invalid_argument("criticality score of an infeasible matching");
  }
  return criticality_score_unchecked(instance, m.edge_ids);
}

Instance remove_edge(const Instance& instance, int id) {
  Instance out = instance;
  out.edges.erase(out.edges.begin() + id);
  for (auto& e : out.edges) {
    if (e.id > id) --e.id;
  }
  auto remap = [id](std::vector<int>& ids) {
    std::erase(ids, id);
    for (int& x : ids) {
      if (x > id) --x;
    }
  };
  for (auto& [v, spec] : out.constraints) {
    if (auto* lam = std::get_if<LaminarSpec>(&spec)) {
      for (auto& s : lam->sets) remap(s.edges);
    } else if (auto* ex = std::get_if<ExplicitSpec>(&spec)) {
      for (auto& s : ex->independent_sets) remap(s);
    }
  }
  return out;
}

}  // namespace dupmatch
