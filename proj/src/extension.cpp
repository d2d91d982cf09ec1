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

#include "dupmatch/extension.hpp"

#include <algorithm>
#include <climits>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace dupmatch {
namespace {

Segment tier(CopyType t) { return Segment{t, {}, {}}; }

// Tiers for kind(first), kind(first+step), ..., kind(last), inclusive.
void append_tiers(std::vector<Segment>& out, CopyKind kind, int first,
                  int last) {
  const int step = first <= last ? 1 : -1;
  if (first < 1 || last < 1) return;
  for (int i = first;; i += step) {
    out.push_back(tier({kind, i}));
    if (i == last) break;
  }
}

class ParallelExtensionOracle final : public IndependenceOracle {
 public:
  // `orig` pairs copy ids with edge ids, sorted by copy id.
  ParallelExtensionOracle(std::vector<int> ground, OraclePtr base,
                          std::vector<std::pair<int, int>> orig)
      : IndependenceOracle(std::move(ground)),
        base_(std::move(base)),
        orig_(std::move(orig)) {}

  bool independent(std::span<const int> set) const override {
    std::vector<int> projected;
    projected.reserve(set.size());
    for (int copy : set) {
      auto it = std::lower_bound(orig_.begin(), orig_.end(),
                                 std::pair<int, int>{copy, INT_MIN});
      if (it == orig_.end() || it->first != copy) return false;
      projected.push_back(it->second);
    }
    std::vector<int> sorted = projected;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
    return base_->independent(projected);
  }

 private:
  OraclePtr base_;
  std::vector<std::pair<int, int>> orig_;
};

bool is_normalized(const Instance& instance) {
  return std::all_of(instance.edges.begin(), instance.edges.end(),
                     [&](const Edge& e) {
                       return !e.critical ||
                              instance.is_critical({Side::kU, e.u}) ||
                              instance.is_critical({Side::kW, e.w});
                     });
}

// Copy types of one edge in canonical (kind, index) order.
std::vector<CopyType> copy_types(const Instance& instance, const Edge& e,
                                 Construction construction, int s, int t) {
  const bool u_crit = instance.is_critical({Side::kU, e.u});
  const bool w_crit = instance.is_critical({Side::kW, e.w});
  const int extra = construction == Construction::kGeneral ? 7 : 0;
  std::vector<CopyType> out{CopyType::a(), CopyType::b0(), CopyType::b1(),
                            CopyType::c()};
  if (e.critical && w_crit) {
    for (int i = 1; i <= t + extra; ++i) out.push_back(CopyType::x(i));
  }
  if (e.critical && u_crit) {
    for (int j = 1; j <= s + extra; ++j) out.push_back(CopyType::z(j));
  }
  if (construction == Construction::kGeneral && e.critical && u_crit &&
      w_crit) {
    out.push_back(CopyType::y0());
    out.push_back(CopyType::y1());
  }
  return out;
}

ExtendedInstance build(const Instance& instance, Construction construction) {
  require_valid(instance);
  ExtendedInstance ext;
  ext.construction = construction;
  std::tie(ext.s, ext.t) = critical_place_bounds(instance);
  ext.unit_capacity = instance.is_one_to_one();

  // Copies of edge e occupy [first_copy[e], first_copy[e + 1]).
  std::vector<int> first_copy;
  first_copy.reserve(instance.edges.size() + 1);
  for (const Edge& e : instance.edges) {
    first_copy.push_back(static_cast<int>(ext.copies.size()));
    for (CopyType type : copy_types(instance, e, construction, ext.s, ext.t)) {
      const int id = static_cast<int>(ext.copies.size());
      ext.copies.push_back(CopyEdge{id, e.id, type, e.u, e.w});
    }
  }
  first_copy.push_back(static_cast<int>(ext.copies.size()));

  for (Side side : {Side::kU, Side::kW}) {
    const SegmentTemplate layout = construction == Construction::kSimple
                                       ? simple_template(side, ext.s, ext.t)
                                       : general_template(side, ext.s, ext.t);
    auto& orders = side == Side::kU ? ext.order_u : ext.order_w;
    auto& oracles = side == Side::kU ? ext.matroid_u : ext.matroid_w;
    const int n = instance.vertex_count(side);
    orders.assign(n, {});
    oracles.reserve(n);
    // Incident edges and copies bucketed by vertex. Keys are computed in
    // edge order so the edge and copy arrays are read sequentially.
    std::vector<int> edge_start(n + 1, 0);
    std::vector<int> start(n + 1, 0);
    for (const Edge& e : instance.edges) {
      ++edge_start[e.endpoint(side) + 1];
      start[e.endpoint(side) + 1] += first_copy[e.id + 1] - first_copy[e.id];
    }
    for (int i = 0; i < n; ++i) {
      edge_start[i + 1] += edge_start[i];
      start[i + 1] += start[i];
    }
    std::vector<int> incident(instance.edges.size());
    {
      std::vector<int> next(edge_start.begin(), edge_start.end() - 1);
      for (const Edge& e : instance.edges) incident[next[e.endpoint(side)]++] = e.id;
    }
    std::vector<std::pair<RankKey, int>> keyed(ext.copies.size());
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (const CopyEdge& copy : ext.copies) {
      const int v = copy.endpoint(side);
      keyed[fill[v]++] = {ranking_key(instance, {side, v}, copy, layout),
                          copy.copy_id};
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      const auto first = keyed.begin() + start[i];
      const auto last = keyed.begin() + start[i + 1];
      std::sort(first, last, [](const auto& a, const auto& b) {
        return ranks_before(a.first, b.first);
      });
      auto& order = orders[i];
      order.reserve(last - first);
      pairs.clear();
      for (auto it = first; it != last; ++it) {
        order.push_back(it->second);
        pairs.emplace_back(it->second, ext.copies[it->second].orig);
      }
      std::vector<int> ground(incident.begin() + edge_start[i],
                              incident.begin() + edge_start[i + 1]);
      oracles.push_back(extend_matroid(
          make_oracle(instance.constraint({side, i}), std::move(ground)), pairs));
    }
  }
  return ext;
}

}  // namespace

std::string to_string(CopyType type) {
  switch (type.kind) {
    case CopyKind::kA:
      return "a";
    case CopyKind::kB0:
      return "b0";
    case CopyKind::kB1:
      return "b1";
    case CopyKind::kC:
      return "c";
    case CopyKind::kX:
      return "x" + std::to_string(type.index);
    case CopyKind::kZ:
      return "z" + std::to_string(type.index);
    case CopyKind::kY0:
      return "y0";
    case CopyKind::kY1:
      return "y1";
  }
  return "?";
}

std::string to_string(Construction c) {
  return c == Construction::kSimple ? "simple" : "general";
}

SegmentTemplate::SegmentTemplate(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  auto place = [this](CopyType type, Slot slot) {
    if (!slots_.emplace(type, slot).second) {
      throw std::invalid_argument("copy type " + to_string(type) +
                                  " appears twice in a template");
    }
  };
  for (int i = 0; i < static_cast<int>(segments_.size()); ++i) {
    const Segment& seg = segments_[i];
    place(seg.base, {i, 2, 0});
    for (int k = 0; k < static_cast<int>(seg.gamma_group.size()); ++k) {
      place(seg.gamma_group[k], {i, 1, k});
    }
    for (int k = 0; k < static_cast<int>(seg.delta_group.size()); ++k) {
      place(seg.delta_group[k], {i, 0, k});
    }
  }
}

std::optional<SegmentTemplate::Slot> SegmentTemplate::find(
    CopyType type) const {
  auto it = slots_.find(type);
  if (it == slots_.end()) return std::nullopt;
  return it->second;
}

SegmentTemplate simple_template(Side side, int s, int t) {
  using T = CopyType;
  std::vector<Segment> segs;
  if (side == Side::kU) {
    append_tiers(segs, CopyKind::kX, 1, t);
    segs.push_back({T::a(), {T::b0()}, {T::b1()}});
    segs.push_back(tier(T::c()));
    append_tiers(segs, CopyKind::kZ, s, 1);
  } else {
    append_tiers(segs, CopyKind::kZ, 1, s);
    segs.push_back({T::c(), {T::b1()}, {T::b0()}});
    segs.push_back(tier(T::a()));
    append_tiers(segs, CopyKind::kX, t, 1);
  }
  return SegmentTemplate(std::move(segs));
}

SegmentTemplate general_template(Side side, int s, int t) {
  using T = CopyType;
  std::vector<Segment> segs;
  if (side == Side::kU) {
    segs.push_back({T::x(1), {T::x(2)}, {T::x(3)}});
    append_tiers(segs, CopyKind::kX, 4, t + 4);
    segs.push_back({T::z(s + 7), {T::y0(), T::z(s + 6)}, {T::y1(), T::z(s + 5)}});
    append_tiers(segs, CopyKind::kZ, s + 4, 4);
    segs.push_back({T::a(),
                    {T::b0(), T::z(3), T::x(t + 5)},
                    {T::b1(), T::z(2), T::x(t + 6)}});
    segs.push_back(tier(T::z(1)));
    segs.push_back(tier(T::x(t + 7)));
    segs.push_back(tier(T::c()));
  } else {
    segs.push_back({T::z(1), {T::z(2)}, {T::z(3)}});
    append_tiers(segs, CopyKind::kZ, 4, s + 4);
    segs.push_back({T::x(t + 7), {T::y1(), T::x(t + 6)}, {T::y0(), T::x(t + 5)}});
    append_tiers(segs, CopyKind::kX, t + 4, 4);
    segs.push_back({T::c(),
                    {T::b1(), T::x(3), T::z(s + 5)},
                    {T::b0(), T::x(2), T::z(s + 6)}});
    segs.push_back(tier(T::x(1)));
    segs.push_back(tier(T::z(s + 7)));
    segs.push_back(tier(T::a()));
  }
  return SegmentTemplate(std::move(segs));
}

bool ranks_before(const RankKey& a, const RankKey& b) {
  if (a.segment != b.segment) return a.segment < b.segment;
  if (a.value != b.value) return a.value > b.value;
  if (a.group_rank != b.group_rank) return a.group_rank < b.group_rank;
  if (a.edge_id != b.edge_id) return a.edge_id < b.edge_id;
  return a.within < b.within;
}

RankKey ranking_key(const Instance& instance, VertexRef v,
                    const CopyEdge& copy, const SegmentTemplate& layout) {
  if (copy.endpoint(v.side) != v.index) {
    throw std::invalid_argument("copy is not incident to " + to_string(v));
  }
  const auto slot = layout.find(copy.ctype);
  if (!slot) {
    throw std::invalid_argument("copy type " + to_string(copy.ctype) +
                                " has no place in the template");
  }
  const Edge& e = instance.edges.at(copy.orig);
  Value value = e.p(v.side);
  if (slot->group_rank == 1) value = value - e.gamma(v.side);
  if (slot->group_rank == 0) value = value - e.delta(v.side);
  return RankKey{slot->segment, value, slot->group_rank, e.id, slot->within};
}

std::pair<int, int> critical_place_bounds(const Instance& instance) {
  int s = 0;
  int t = 0;
  if (instance.is_one_to_one()) {
    for (const auto& v : instance.critical_vertices) {
      (v.side == Side::kU ? s : t) += 1;
    }
    return {s, t};
  }
  VertexMatroids matroids(instance);
  return {matroids.critical_rank_sum(Side::kU),
          matroids.critical_rank_sum(Side::kW)};
}

bool admits_simple(const Instance& instance) {
  return std::all_of(instance.edges.begin(), instance.edges.end(),
                     [&](const Edge& e) {
                       const bool touches_c =
                           instance.is_critical({Side::kU, e.u}) ||
                           instance.is_critical({Side::kW, e.w});
                       return e.critical == touches_c;
                     });
}

ExtendedInstance build_simple(const Instance& instance) {
  if (!admits_simple(instance)) {
    throw std::invalid_argument(
        "simple construction needs every edge at a critical vertex to be "
        "critical (and no other critical edges)");
  }
  return build(instance, Construction::kSimple);
}

ExtendedInstance build_general(const Instance& instance) {
  if (!is_normalized(instance)) {
    throw std::invalid_argument(
        "general construction needs a normalized instance");
  }
  return build(instance, Construction::kGeneral);
}

OraclePtr extend_matroid(OraclePtr vertex_matroid,
                         std::span<const std::pair<int, int>> copies) {
  std::vector<std::pair<int, int>> orig(copies.begin(), copies.end());
  std::sort(orig.begin(), orig.end());
  std::vector<int> ground;
  ground.reserve(orig.size());
  for (const auto& [copy, edge] : orig) ground.push_back(copy);
  return std::make_shared<ParallelExtensionOracle>(
      std::move(ground), std::move(vertex_matroid), std::move(orig));
}

std::string dump_extended(const ExtendedInstance& ext) {
  std::ostringstream out;
  for (Side side : {Side::kU, Side::kW}) {
    const auto& orders = side == Side::kU ? ext.order_u : ext.order_w;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      out << (side == Side::kU ? 'U' : 'W') << i << ':';
      for (int id : orders[i]) {
        const CopyEdge& c = ext.copies[id];
        out << ' ' << to_string(c.ctype) << '(' << c.orig << ')';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace dupmatch
