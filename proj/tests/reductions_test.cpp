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

#include "dupmatch/reductions.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "dupmatch/verify.hpp"
#include "support.hpp"

using namespace dupmatch;

namespace {

// Classic blocking written out directly on integer preferences.
struct Classic {
  int u_count, w_count;
  std::vector<std::array<int, 4>> edges;  // u, w, p_u, p_w
  std::vector<char> crit_u, crit_w, crit_e;

  int score(const std::vector<int>& m) const {
    int s = 0;
    for (int id : m) {
      if (!crit_e[id]) continue;
      s += crit_u[edges[id][0]] + crit_w[edges[id][1]];
    }
    return s;
  }

  bool blocks(const std::vector<int>& m, int e, ClassicModel model, int margin,
              int optimum) const {
    int mu = -1, mw = -1;
    for (int id : m) {
      if (id == e) return false;
      if (edges[id][0] == edges[e][0]) mu = id;
      if (edges[id][1] == edges[e][1]) mw = id;
    }
    const int gu = edges[e][2] - (mu < 0 ? 0 : edges[mu][2]);
    const int gw = edges[e][3] - (mw < 0 ? 0 : edges[mw][3]);
    if (gu <= 0 || gw <= 0) return false;
    if (model == ClassicModel::kDeltaMin && std::min(gu, gw) < margin) return false;
    if (model == ClassicModel::kDeltaMax && std::max(gu, gw) < margin) return false;
    std::vector<int> swapped;
    for (int id : m) {
      if (id != mu && id != mw) swapped.push_back(id);
    }
    swapped.push_back(e);
    return score(swapped) == optimum;
  }
};

Classic random_classic(std::mt19937_64& rng, int n_edges) {
  Classic c;
  c.u_count = 3;
  c.w_count = 3;
  for (int i = 0; i < n_edges; ++i) {
    c.edges.push_back({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                       static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    c.crit_e.push_back(rng() % 2);
  }
  for (int i = 0; i < 3; ++i) {
    c.crit_u.push_back(rng() % 3 == 0);
    c.crit_w.push_back(rng() % 3 == 0);
  }
  return c;
}

ClassicInstance to_source(const Classic& c) {
  ClassicInstance s;
  s.u_count = c.u_count;
  s.w_count = c.w_count;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    s.edges.push_back({e[0], e[1], Value::from_int(e[2]), Value::from_int(e[3])});
    if (c.crit_e[i]) s.critical_edges.push_back(static_cast<int>(i));
  }
  for (int i = 0; i < 3; ++i) {
    if (c.crit_u[i]) s.critical_vertices.push_back({Side::kU, i});
    if (c.crit_w[i]) s.critical_vertices.push_back({Side::kW, i});
  }
  return s;
}

}  // namespace

TEST_CASE("reduced instances block exactly where the classic model does") {
  std::mt19937_64 rng(3);
  const Value grid = Value::from_int(1);
  int compared = 0;
  for (int round = 0; round < 120; ++round) {
    const Classic c = random_classic(rng, 1 + static_cast<int>(rng() % 7));
    const ClassicInstance source = to_source(c);
    for (ClassicModel model :
         {ClassicModel::kWeak, ClassicModel::kDeltaMin, ClassicModel::kDeltaMax}) {
      for (int margin : {1, 2, 3}) {
        if (model == ClassicModel::kWeak && margin > 1) continue;
        const ClassicStability rule{model, Value::from_int(margin)};
        const Instance reduced = from_classic(source, rule, {}, grid);
        REQUIRE(validate(reduced).ok());
        const int optimum = criticality_optimum(reduced);
        for (const Matching& m : enumerate_feasible(reduced)) {
          CHECK(optimum >= c.score(m.edge_ids));
          for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
            if (m.contains(e)) continue;
            const bool expected = c.blocks(m.edge_ids, e, model, margin, optimum);
            CHECK(cgamma_blocks(reduced, m, e, optimum).has_value() == expected);
            CHECK(classic_blocks(source, rule, {}, m, e, optimum) == expected);
            ++compared;
          }
        }
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("free edges never block") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 50; ++round) {
    const Classic c = random_classic(rng, 5);
    const ClassicInstance source = to_source(c);
    const std::vector<int> free{0, 2};
    const Instance reduced =
        from_free_edges(source, free, {ClassicModel::kWeak, Value()},
                        Value::from_int(1));
    const int optimum = criticality_optimum(reduced);
    for (const Matching& m : enumerate_feasible(reduced)) {
      for (int e = 0; e < 5; ++e) {
        if (m.contains(e)) continue;
        const bool is_free = e == 0 || e == 2;
        const bool expected =
            !is_free && c.blocks(m.edge_ids, e, ClassicModel::kWeak, 1, optimum);
        CHECK(cgamma_blocks(reduced, m, e, optimum).has_value() == expected);
      }
    }
  }
}

TEST_CASE("thresholds of the reductions") {
  ClassicInstance source;
  source.u_count = source.w_count = 1;
  source.edges.push_back({0, 0, Value::from_int(3), Value::from_int(1)});
  const Value one = Value::from_int(1);

  const Edge weak = from_weak_stability(source, one).edges[0];
  CHECK(weak.p_u == Value::from_int(6));
  CHECK(weak.gamma_u == one);
  CHECK(weak.delta_u == Value::from_int(2));

  const Edge dmin = from_delta_min(source, Value::from_int(2), one).edges[0];
  CHECK(dmin.gamma_w == Value::from_int(3));
  CHECK(dmin.delta_w == Value::from_int(4));

  const Edge dmax = from_delta_max(source, Value::from_int(2), one).edges[0];
  CHECK(dmax.gamma_u == one);
  CHECK(dmax.delta_u == Value::from_int(4));

  const std::vector<int> free{0};
  const Edge f = from_free_edges(source, free).edges[0];
  CHECK(f.gamma_u.is_infinity());
  CHECK(f.delta_w.is_infinity());
}

TEST_CASE("reductions reject off-grid input") {
  ClassicInstance source;
  source.u_count = source.w_count = 1;
  source.edges.push_back({0, 0, Value::parse("0.5"), Value::from_int(1)});
  const Value one = Value::from_int(1);
  CHECK_THROWS_AS(from_weak_stability(source, one), std::invalid_argument);
  CHECK_NOTHROW(from_weak_stability(source, Value::parse("0.5")));
  CHECK_THROWS_AS(from_delta_min(source, Value(), Value::parse("0.5")),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_delta_max(source, Value::parse("0.25"), Value::parse("0.5")),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_weak_stability(source, Value()), std::invalid_argument);
  const std::vector<int> bad_free{3};
  CHECK_THROWS_AS(from_free_edges(source, bad_free), std::invalid_argument);
}
