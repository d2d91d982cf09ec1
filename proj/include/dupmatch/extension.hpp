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

#ifndef DUPMATCH_EXTENSION_HPP_
#define DUPMATCH_EXTENSION_HPP_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dupmatch/instance.hpp"
#include "dupmatch/matroid.hpp"

namespace dupmatch {

enum class CopyKind : unsigned char { kA, kB0, kB1, kC, kX, kZ, kY0, kY1 };

// Type of a parallel copy. `index` is 1-based for X and Z copies and zero
// for every other kind.
struct CopyType {
  CopyKind kind = CopyKind::kA;
  int index = 0;

  static constexpr CopyType a() { return {CopyKind::kA, 0}; }
  static constexpr CopyType b0() { return {CopyKind::kB0, 0}; }
  static constexpr CopyType b1() { return {CopyKind::kB1, 0}; }
  static constexpr CopyType c() { return {CopyKind::kC, 0}; }
  static constexpr CopyType x(int i) { return {CopyKind::kX, i}; }
  static constexpr CopyType z(int j) { return {CopyKind::kZ, j}; }
  static constexpr CopyType y0() { return {CopyKind::kY0, 0}; }
  static constexpr CopyType y1() { return {CopyKind::kY1, 0}; }

  friend auto operator<=>(const CopyType&, const CopyType&) = default;
  friend bool operator==(const CopyType&, const CopyType&) = default;
};

// "a", "b0", "x3", ...
std::string to_string(CopyType type);

struct CopyEdge {
  int copy_id = 0;
  int orig = 0;
  CopyType ctype;
  int u = 0;
  int w = 0;

  int endpoint(Side s) const { return s == Side::kU ? u : w; }
};

// One stretch of a vertex's ranking. Copies of the base type are ordered by
// p_v; copies in the gamma group carry value p_v - gamma_v and those in the
// delta group p_v - delta_v, so they interleave with the base copies. A tier
// is a segment with both groups empty.
struct Segment {
  CopyType base;
  std::vector<CopyType> gamma_group;
  std::vector<CopyType> delta_group;
};

class SegmentTemplate {
 public:
  struct Slot {
    int segment = 0;
    // 0 = delta group, 1 = gamma group, 2 = base. Smaller ranks first.
    int group_rank = 2;
    int within = 0;
  };

  // Throws std::invalid_argument if a copy type appears twice.
  explicit SegmentTemplate(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  std::optional<Slot> find(CopyType type) const;

 private:
  std::vector<Segment> segments_;
  std::map<CopyType, Slot> slots_;
};

// Templates for the all-edges-critical construction. s and t bound the
// number of critical places on the U and W side.
SegmentTemplate simple_template(Side side, int s, int t);
// Templates for arbitrary critical edge sets.
SegmentTemplate general_template(Side side, int s, int t);

// Sort key of a copy in one vertex's ranking. Ordered by segment, then value
// descending, then group rank, then edge id, then position inside the
// group; the last two keep grouped copies of one edge adjacent.
struct RankKey {
  int segment = 0;
  Value value;
  int group_rank = 0;
  int edge_id = 0;
  int within = 0;
};

// True when `a` is strictly better than `b`.
bool ranks_before(const RankKey& a, const RankKey& b);

// Throws std::invalid_argument if the copy does not touch v or its type has
// no place in `layout`.
RankKey ranking_key(const Instance& instance, VertexRef v,
                    const CopyEdge& copy, const SegmentTemplate& layout);

enum class Construction { kSimple, kGeneral };

std::string to_string(Construction c);

struct ExtendedInstance {
  Construction construction = Construction::kGeneral;
  int s = 0;
  int t = 0;
  bool unit_capacity = true;
  std::vector<CopyEdge> copies;  // copies[i].copy_id == i
  // Strict preference lists over incident copy ids, best first.
  std::vector<std::vector<int>> order_u, order_w;
  // Parallel extensions of the vertex matroids, over copy ids.
  std::vector<OraclePtr> matroid_u, matroid_w;

  const std::vector<int>& order(VertexRef v) const {
    return v.side == Side::kU ? order_u.at(v.index) : order_w.at(v.index);
  }
  const IndependenceOracle& matroid(VertexRef v) const {
    return v.side == Side::kU ? *matroid_u.at(v.index) : *matroid_w.at(v.index);
  }
  int orig(int copy_id) const { return copies.at(copy_id).orig; }
};

// Copies per critical place bound: |C ∩ U| and |C ∩ W| for one-to-one
// instances, rank sums over critical vertices otherwise.
std::pair<int, int> critical_place_bounds(const Instance& instance);

// True when every edge with a critical endpoint is critical, i.e. the
// instance behaves as if all edges were critical.
bool admits_simple(const Instance& instance);

// Throw std::invalid_argument when the precondition fails (admits_simple
// for build_simple, a normalized instance for build_general).
ExtendedInstance build_simple(const Instance& instance);
ExtendedInstance build_general(const Instance& instance);

// Matroid over copies: at most one copy per original edge, and the
// projection independent in `vertex_matroid`. `copies` pairs copy ids with
// their original edge ids.
OraclePtr extend_matroid(OraclePtr vertex_matroid,
                         std::span<const std::pair<int, int>> copies);

// One line per vertex: "U0: x1(2) a(2) ...".
std::string dump_extended(const ExtendedInstance& ext);

}  // namespace dupmatch

#endif  // DUPMATCH_EXTENSION_HPP_
