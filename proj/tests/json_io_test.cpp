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

#include "dupmatch/json_io.hpp"

#include <doctest.h>

#include <stdexcept>

#include "dupmatch/generator.hpp"
#include "support.hpp"

using namespace dupmatch;

TEST_CASE("instances round trip through JSON") {
  GeneratorParams params;
  params.capacity_max = 3;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = generate(seed, params);
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("matroid specs round trip") {
  Instance inst = testing::make_instance(
      1, 3,
      {testing::make_edge(0, 0, "1", "1", "1", "2", "1", "2"),
       testing::make_edge(0, 1, "1", "1", "1", "2", "1", "2"),
       testing::make_edge(0, 2, "1", "1", "1", "2", "1", "2")});
  inst.constraints[{Side::kU, 0}] = LaminarSpec{{{{0, 1}, 1}, {{0, 1, 2}, 2}}};
  CHECK(parse_instance(serialize_instance(inst)) == inst);
  inst.constraints[{Side::kU, 0}] = ExplicitSpec{{{0, 1}, {2}}};
  CHECK(parse_instance(serialize_instance(inst)) == inst);
  inst.constraints[{Side::kU, 0}] = CapacitySpec{2};
  CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("integer numbers and unsorted edges are accepted") {
  const Instance inst = parse_instance(R"({
    "u_count": 1, "w_count": 1, "critical_vertices": [], "constraints": {},
    "edges": [
      {"id": 1, "u": 0, "w": 0, "p_u": 2, "p_w": "0.5", "gamma_u": 1,
       "delta_u": "1.5", "gamma_w": "inf", "delta_w": "inf", "critical": false},
      {"id": 0, "u": 0, "w": 0, "p_u": 0, "p_w": 0, "gamma_u": 1,
       "delta_u": 2, "gamma_w": 1, "delta_w": 2, "critical": false}
    ]})");
  REQUIRE(inst.edges.size() == 2);
  CHECK(inst.edges[1].p_u == Value::from_int(2));
  CHECK(inst.edges[1].gamma_w.is_infinity());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_instance("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({"u_count": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({
    "u_count": 1, "w_count": 1, "critical_vertices": [], "constraints": {},
    "edges": [{"id": 0, "u": 0, "w": 0, "p_u": "1.0000001", "p_w": 0,
      "gamma_u": 1, "delta_u": 2, "gamma_w": 1, "delta_w": 2,
      "critical": false}]})"),
                  std::invalid_argument);
}

TEST_CASE("matchings parse from the accepted shapes") {
  const Matching m{{1, 4}};
  CHECK(matching_from_json(nlohmann::json::parse("[4, 1]")) == m);
  CHECK(matching_from_json(nlohmann::json::parse(R"({"edge_ids": [1, 4]})")) == m);
  CHECK(matching_from_json(nlohmann::json::parse(R"({"matching": [4, 1, 4]})")) == m);
  CHECK_THROWS(matching_from_json(nlohmann::json::parse(R"({"x": 1})")));
}
