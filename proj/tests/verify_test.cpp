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

#include "dupmatch/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "dupmatch/json_io.hpp"
#include "dupmatch/solver.hpp"
#include "support.hpp"

using namespace dupmatch;
using testing::make_edge;
using testing::make_instance;

namespace {

std::string data_path(const char* name) {
  return std::string(DUPMATCH_TEST_DATA) + "/" + name;
}

std::vector<int> blocking_ids(const Certificate& cert) {
  std::vector<int> ids;
  for (const auto& b : cert.blocking_edges) ids.push_back(b.edge);
  return ids;
}

}  // namespace

TEST_CASE("a lone edge blocks the empty matching") {
  const Instance inst =
      make_instance(1, 1, {make_edge(0, 0, "2", "2", "1", "2", "1", "2")});
  const Verifier verifier(inst);
  const auto witness = verifier.blocks(make_matching({}), 0);
  REQUIRE(witness.has_value());
  CHECK(*witness == BlockingWitness{0, std::nullopt, std::nullopt});
  CHECK(verifier.certify(make_matching({0})).is_cgamma_stable);
  CHECK_THROWS(verifier.blocks(make_matching({0}), 0));
}

TEST_CASE("small gains below gamma do not block") {
  // U0 holds edge 0 and would gain 0.5 by moving to edge 1.
  const Instance inst =
      make_instance(1, 2,
                    {make_edge(0, 0, "1", "3", "1", "2", "1", "2"),
                     make_edge(0, 1, "1.5", "3", "1", "2", "1", "2")});
  CHECK(certify(inst, make_matching({0})).is_cgamma_stable);
  CHECK(certify(inst, make_matching({1})).is_cgamma_stable);
}

TEST_CASE("gamma on one side needs delta on the other") {
  // U0 gains 1 (= gamma_u) and W1 gains 1 from being unmatched.
  Instance inst = make_instance(1, 2,
                                {make_edge(0, 0, "1", "3", "1", "2", "1", "2"),
                                 make_edge(0, 1, "2", "1", "1", "2", "1", "2")});
  CHECK(certify(inst, make_matching({0})).is_cgamma_stable);
  inst.edges[1].p_w = testing::V("2");  // now W1 gains delta_w
  const Certificate cert = certify(inst, make_matching({0}));
  CHECK_FALSE(cert.is_cgamma_stable);
  REQUIRE(cert.blocking_edges.size() == 1);
  CHECK(cert.blocking_edges[0] == BlockingWitness{1, 0, std::nullopt});
}

TEST_CASE("swaps that lose criticality do not block") {
  // U0 is critical and only edge 0 is critical.
  const Instance inst =
      make_instance(1, 2,
                    {make_edge(0, 0, "0", "0", "1", "2", "1", "2", true),
                     make_edge(0, 1, "5", "5", "1", "2", "1", "2")},
                    {{Side::kU, 0}});
  const Certificate cert = certify(inst, make_matching({0}));
  CHECK(cert.criticality_optimum == 1);
  CHECK(cert.is_cgamma_stable);
  const Certificate other = certify(inst, make_matching({1}));
  CHECK_FALSE(other.is_critical);
  CHECK(other.blocking_edges.empty());
  CHECK_FALSE(other.is_cgamma_stable);
}

TEST_CASE("infeasible matchings are reported as such") {
  const Instance inst =
      make_instance(1, 2,
                    {make_edge(0, 0, "1", "1", "1", "2", "1", "2"),
                     make_edge(0, 1, "1", "1", "1", "2", "1", "2")});
  const Certificate cert = certify(inst, make_matching({0, 1}));
  CHECK_FALSE(cert.feasible);
  CHECK_FALSE(cert.is_cgamma_stable);
  CHECK(certificate_to_json(cert)["feasible"] == false);
}

TEST_CASE("enumeration visits every matching of a triangle-free path") {
  // Path U0 - W0 - U1 - W1: matchings {}, {0}, {1}, {2}, {0,2}.
  const Instance inst =
      make_instance(2, 2,
                    {make_edge(0, 0, "1", "1", "1", "2", "1", "2"),
                     make_edge(1, 0, "1", "1", "1", "2", "1", "2"),
                     make_edge(1, 1, "1", "1", "1", "2", "1", "2")});
  const auto all = enumerate_feasible(inst);
  REQUIRE(all.size() == 5);
  CHECK(all[4] == make_matching({0, 2}));
}

TEST_CASE("the enumeration cap is enforced") {
  std::vector<Edge> edges;
  for (int i = 0; i < 21; ++i) {
    edges.push_back(make_edge(0, 0, "1", "1", "1", "2", "1", "2"));
  }
  const Instance inst = make_instance(1, 1, edges);
  CHECK_THROWS_AS(criticality_optimum(inst), CapExceeded);
  CHECK_THROWS_AS(Verifier(inst, 20), CapExceeded);
  GeneratorParams params;
  params.edge_count = 25;
  CHECK_THROWS_AS(ratio_harness(1, params), CapExceeded);
}

TEST_CASE("the tight fixture reaches the ratio bound") {
  const Instance inst = parse_instance(testing::read_text(data_path("tight_ratio.json")));
  const auto opt = max_cgamma_stable(inst);
  REQUIRE(opt.has_value());
  CHECK(opt->size == 3);
  CHECK(certify(inst, opt->witness).is_cgamma_stable);
  const RatioReport report = check_instance(inst);
  CHECK(report.alg_size == 2);
  CHECK(report.ok());
  CHECK(2 * report.opt_stable_size == 3 * report.alg_size);
}

TEST_CASE("making an edge free never adds blocking edges") {
  std::mt19937_64 rng(4);
  GeneratorParams params;
  params.free_edge_prob = 0.0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Instance inst = generate(seed, params);
    Instance freed = inst;
    const int f = static_cast<int>(rng() % inst.edges.size());
    Edge& e = freed.edges[f];
    e.gamma_u = e.delta_u = e.gamma_w = e.delta_w = Value::infinity();
    const Verifier before(inst);
    const Verifier after(freed);
    for (const Matching& m : enumerate_feasible(inst)) {
      const auto was = blocking_ids(before.certify(m));
      for (int id : blocking_ids(after.certify(m))) {
        CHECK(id != f);
        CHECK(std::find(was.begin(), was.end(), id) != was.end());
      }
    }
  }
}

TEST_CASE("classic blocking ignores free edges and needs strict gains") {
  ClassicInstance source;
  source.u_count = source.w_count = 1;
  source.edges.push_back({0, 0, Value::from_int(1), Value()});
  source.edges.push_back({0, 0, Value::from_int(2), Value::from_int(1)});
  const ClassicStability weak{ClassicModel::kWeak, Value()};
  CHECK_FALSE(classic_blocks(source, weak, {}, make_matching({}), 0, 0));
  CHECK(classic_blocks(source, weak, {}, make_matching({}), 1, 0));
  const std::vector<int> free{1};
  CHECK_FALSE(classic_blocks(source, weak, free, make_matching({}), 1, 0));
}

TEST_CASE("harness reports do not depend on the thread count") {
  GeneratorParams params;
  RatioOptions one;
  one.threads = 1;
  RatioOptions many;
  many.threads = 4;
  many.first_seed = 0;
  const auto a = ratio_harness(40, params, one);
  const auto b = ratio_harness(40, params, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == i);
    CHECK(ratio_report_to_json(a[i]) == ratio_report_to_json(b[i]));
    CHECK(a[i].ok());
  }
  CHECK(ratio_harness(0, params).empty());
}

TEST_CASE("failure minimization keeps the failing edge") {
  GeneratorParams params;
  const Instance inst = generate(12, params);
  const Value marker = inst.edges[4].p_u + inst.edges[4].p_w;
  auto fails = [&](const Instance& i) {
    return std::any_of(i.edges.begin(), i.edges.end(), [&](const Edge& e) {
      return e.p_u + e.p_w == marker;
    });
  };
  const Instance small = minimize_failure(inst, fails);
  CHECK(small.edges.size() == 1);
  CHECK(fails(small));
  CHECK(validate(small).ok());
}
