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

#include <algorithm>
#include <future>
#include <thread>

#include "dupmatch/engine_gs.hpp"
#include "dupmatch/engine_kernel.hpp"
#include "dupmatch/json_io.hpp"
#include "dupmatch/solver.hpp"

namespace dupmatch {
namespace {

std::vector<int> mask_to_ids(std::uint32_t mask) {
  std::vector<int> ids;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) ids.push_back(i);
  }
  return ids;
}

// Calls fn on every feasible subset in bitmask order.
template <typename Fn>
void for_each_feasible(const Instance& instance, const VertexMatroids& matroids,
                       Fn fn) {
  const auto n = static_cast<std::uint32_t>(instance.edges.size());
  const std::uint32_t full = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    Matching m{mask_to_ids(mask)};
    if (matroids.feasible(m)) fn(m);
  }
}

int optimum_of(const Instance& instance, const VertexMatroids& matroids) {
  int best = 0;
  for_each_feasible(instance, matroids, [&](const Matching& m) {
    best = std::max(best, criticality_score_unchecked(instance, m.edge_ids));
  });
  return best;
}

std::vector<int> without(const std::vector<int>& set, std::optional<int> drop) {
  std::vector<int> out;
  for (int x : set) {
    if (!drop || x != *drop) out.push_back(x);
  }
  return out;
}

// Witness search shared by Verifier::blocks and cgamma_blocks.
std::optional<BlockingWitness> find_witness(const Instance& instance,
                                            const VertexMatroids& matroids,
                                            const Matching& m, int edge,
                                            int optimum) {
  if (m.contains(edge)) {
    throw std::invalid_argument("blocking test for an edge inside the matching");
  }
  const Edge& e = instance.edges.at(edge);
  const VertexRef u{Side::kU, e.u};
  const VertexRef w{Side::kW, e.w};
  const std::vector<int> at_u = matroids.restrict_to(u, m);
  const std::vector<int> at_w = matroids.restrict_to(w, m);

  std::vector<std::optional<int>> f_options{std::nullopt};
  f_options.insert(f_options.end(), at_u.begin(), at_u.end());
  std::vector<std::optional<int>> g_options{std::nullopt};
  g_options.insert(g_options.end(), at_w.begin(), at_w.end());

  for (const auto& f : f_options) {
    const Value gain_u =
        e.p_u - (f ? instance.edges[*f].p_u : kUnmatchedPreference);
    if (gain_u < e.gamma_u) continue;  // neither combination can hold
    std::vector<int> side_u = without(at_u, f);
    side_u.push_back(edge);
    if (!matroids.at(u).independent(side_u)) continue;
    for (const auto& g : g_options) {
      const Value gain_w =
          e.p_w - (g ? instance.edges[*g].p_w : kUnmatchedPreference);
      const bool clears = (gain_u >= e.gamma_u && gain_w >= e.delta_w) ||
                          (gain_u >= e.delta_u && gain_w >= e.gamma_w);
      if (!clears) continue;
      std::vector<int> side_w = without(at_w, g);
      side_w.push_back(edge);
      if (!matroids.at(w).independent(side_w)) continue;
      std::vector<int> swapped = without(without(m.edge_ids, f), g);
      swapped.push_back(edge);
      if (criticality_score_unchecked(instance, swapped) != optimum) continue;
      return BlockingWitness{edge, f, g};
    }
  }
  return std::nullopt;
}

std::optional<StableOptimum> max_stable_with(const Verifier& verifier) {
  std::vector<Matching> feasible;
  for_each_feasible(verifier.instance(),
                    VertexMatroids(verifier.instance()),
                    [&](const Matching& m) { feasible.push_back(m); });
  std::stable_sort(feasible.begin(), feasible.end(),
                   [](const Matching& a, const Matching& b) {
                     return a.size() > b.size();
                   });
  for (const Matching& m : feasible) {
    if (verifier.certify(m).is_cgamma_stable) {
      return StableOptimum{static_cast<int>(m.size()), m};
    }
  }
  return std::nullopt;
}

}  // namespace

void check_cap(const Instance& instance, std::size_t cap) {
  const std::size_t hard_limit = 30;
  if (instance.edges.size() > std::min(cap, hard_limit)) {
    throw CapExceeded("instance has " + std::to_string(instance.edges.size()) +
                      " edges; exhaustive checks are capped at " +
                      std::to_string(std::min(cap, hard_limit)));
  }
}

std::vector<Matching> enumerate_feasible(const Instance& instance,
                                         std::size_t cap) {
  check_cap(instance, cap);
  VertexMatroids matroids(instance);
  std::vector<Matching> out;
  for_each_feasible(instance, matroids,
                    [&](const Matching& m) { out.push_back(m); });
  return out;
}

int criticality_optimum(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  return optimum_of(instance, VertexMatroids(instance));
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json blocking = nlohmann::json::array();
  for (const auto& b : cert.blocking_edges) {
    blocking.push_back({{"edge", b.edge},
                        {"f", b.f ? nlohmann::json(*b.f) : nlohmann::json()},
                        {"g", b.g ? nlohmann::json(*b.g) : nlohmann::json()}});
  }
  return {{"feasible", cert.feasible},
          {"criticality_score", cert.criticality_score},
          {"criticality_optimum", cert.criticality_optimum},
          {"blocking_edges", blocking},
          {"is_critical", cert.is_critical},
          {"is_cgamma_stable", cert.is_cgamma_stable}};
}

Verifier::Verifier(const Instance& instance, std::size_t cap)
    : instance_((check_cap(instance, cap), instance)), matroids_(instance_) {
  optimum_ = optimum_of(instance_, matroids_);
}

std::optional<BlockingWitness> Verifier::blocks(const Matching& m,
                                                int edge) const {
  return find_witness(instance_, matroids_, m, edge, optimum_);
}

Certificate Verifier::certify(const Matching& m) const {
  Certificate cert;
  cert.criticality_optimum = optimum_;
  cert.feasible = matroids_.feasible(m);
  if (!cert.feasible) return cert;
  cert.criticality_score = criticality_score_unchecked(instance_, m.edge_ids);
  cert.is_critical = cert.criticality_score == optimum_;
  for (const Edge& e : instance_.edges) {
    if (m.contains(e.id)) continue;
    if (auto witness = blocks(m, e.id)) cert.blocking_edges.push_back(*witness);
  }
  cert.is_cgamma_stable = cert.is_critical && cert.blocking_edges.empty();
  return cert;
}

std::optional<BlockingWitness> cgamma_blocks(const Instance& instance,
                                             const Matching& m, int edge,
                                             int optimum) {
  const VertexMatroids matroids(instance);
  if (!matroids.feasible(m)) {
    throw std::invalid_argument("blocking test on an infeasible matching");
  }
  return find_witness(instance, matroids, m, edge, optimum);
}

Certificate certify(const Instance& instance, const Matching& m,
                    std::size_t cap) {
  return Verifier(instance, cap).certify(m);
}

std::optional<StableOptimum> max_cgamma_stable(const Instance& instance,
                                               std::size_t cap) {
  return max_stable_with(Verifier(instance, cap));
}

bool classic_blocks(const ClassicInstance& source, ClassicStability model,
                    std::span<const int> free_edges, const Matching& m,
                    int edge, int optimum) {
  if (std::find(free_edges.begin(), free_edges.end(), edge) != free_edges.end()) {
    return false;
  }
  if (m.contains(edge)) return false;
  const ClassicEdge& e = source.edges.at(edge);
  std::optional<int> mu, mw;
  for (int id : m.edge_ids) {
    if (source.edges[id].u == e.u) mu = id;
    if (source.edges[id].w == e.w) mw = id;
  }
  const Value gain_u = e.p_u - (mu ? source.edges[*mu].p_u : Value());
  const Value gain_w = e.p_w - (mw ? source.edges[*mw].p_w : Value());
  if (!(gain_u > Value() && gain_w > Value())) return false;
  switch (model.model) {
    case ClassicModel::kWeak:
      break;
    case ClassicModel::kDeltaMin:
      if (std::min(gain_u, gain_w) < model.margin) return false;
      break;
    case ClassicModel::kDeltaMax:
      if (std::max(gain_u, gain_w) < model.margin) return false;
      break;
  }
  auto is_crit_vertex = [&](VertexRef v) {
    return std::find(source.critical_vertices.begin(),
                     source.critical_vertices.end(),
                     v) != source.critical_vertices.end();
  };
  auto is_crit_edge = [&](int id) {
    return std::find(source.critical_edges.begin(), source.critical_edges.end(),
                     id) != source.critical_edges.end();
  };
  int score = 0;
  for (int id : m.edge_ids) {
    if (id == mu || id == mw) continue;
    if (!is_crit_edge(id)) continue;
    score += is_crit_vertex({Side::kU, source.edges[id].u});
    score += is_crit_vertex({Side::kW, source.edges[id].w});
  }
  if (is_crit_edge(edge)) {
    score += is_crit_vertex({Side::kU, e.u});
    score += is_crit_vertex({Side::kW, e.w});
  }
  return score == optimum;
}

bool is_common_independent(const ExtendedInstance& ext,
                           std::span<const int> matched) {
  for (Side side : {Side::kU, Side::kW}) {
    const auto& orders = side == Side::kU ? ext.order_u : ext.order_w;
    std::vector<std::vector<int>> parts(orders.size());
    for (int c : matched) parts.at(ext.copies.at(c).endpoint(side)).push_back(c);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!ext.matroid({side, static_cast<int>(i)}).independent(parts[i])) {
        return false;
      }
    }
  }
  return true;
}

bool is_maximal_common_independent(const ExtendedInstance& ext,
                                   std::span<const int> matched) {
  if (!is_common_independent(ext, matched)) return false;
  std::vector<int> probe(matched.begin(), matched.end());
  for (const CopyEdge& c : ext.copies) {
    if (std::find(matched.begin(), matched.end(), c.copy_id) != matched.end()) {
      continue;
    }
    probe.push_back(c.copy_id);
    const bool fits = is_common_independent(ext, probe);
    probe.pop_back();
    if (fits) return false;
  }
  return true;
}

std::vector<int> extended_blocking_copies(const ExtendedInstance& ext,
                                          std::span<const int> matched) {
  std::vector<int> pos_u(ext.copies.size()), pos_w(ext.copies.size());
  for (const auto& order : ext.order_u) {
    for (std::size_t k = 0; k < order.size(); ++k) pos_u[order[k]] = static_cast<int>(k);
  }
  for (const auto& order : ext.order_w) {
    for (std::size_t k = 0; k < order.size(); ++k) pos_w[order[k]] = static_cast<int>(k);
  }
  std::vector<char> in_m(ext.copies.size(), 0);
  for (int c : matched) in_m.at(c) = 1;

  auto dominated = [&](const CopyEdge& c, Side side) {
    const VertexRef v{side, c.endpoint(side)};
    const auto& pos = side == Side::kU ? pos_u : pos_w;
    std::vector<int> held;
    for (int id : ext.order(v)) {
      if (in_m[id]) held.push_back(id);
    }
    const auto circuit = fundamental_circuit(ext.matroid(v), held, c.copy_id);
    if (!circuit) return false;
    return std::all_of(circuit->begin(), circuit->end(), [&](int y) {
      return y == c.copy_id || pos[y] < pos[c.copy_id];
    });
  };

  std::vector<int> out;
  for (const CopyEdge& c : ext.copies) {
    if (in_m[c.copy_id]) continue;
    if (!dominated(c, Side::kU) && !dominated(c, Side::kW)) {
      out.push_back(c.copy_id);
    }
  }
  return out;
}

nlohmann::json ratio_report_to_json(const RatioReport& r) {
  return {{"seed", r.seed},
          {"edge_count", r.edge_count},
          {"alg_size", r.alg_size},
          {"opt_stable_size", r.opt_stable_size},
          {"ratio_ok", r.ratio_ok},
          {"is_critical", r.is_critical},
          {"is_cgamma_stable", r.is_cgamma_stable},
          {"engines_agree", r.engines_agree},
          {"opt_found", r.opt_found},
          {"engine", r.engine},
          {"construction", r.construction}};
}

RatioReport check_instance(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  RatioReport report;
  report.edge_count = static_cast<int>(instance.edges.size());
  const SolveResult result = solve(instance);
  report.alg_size = static_cast<int>(result.matching.size());
  report.engine = to_string(result.engine);
  report.construction = to_string(result.construction);

  const Verifier verifier(instance, cap);
  const Certificate cert = verifier.certify(result.matching);
  report.is_critical = cert.is_critical;
  report.is_cgamma_stable = cert.is_cgamma_stable;

  if (result.extended.unit_capacity) {
    const std::vector<int> kernel = solve_kernel(result.extended);
    report.engines_agree = project(result.extended, kernel) == result.matching;
  }

  if (const auto opt = max_stable_with(verifier)) {
    report.opt_found = true;
    report.opt_stable_size = opt->size;
    report.ratio_ok = 2 * opt->size <= 3 * report.alg_size;
  }
  return report;
}

std::vector<RatioReport> ratio_harness(std::size_t seed_count,
                                       const GeneratorParams& params,
                                       const RatioOptions& options) {
  check_params(params);
  if (static_cast<std::size_t>(params.edge_count) > options.cap) {
    throw CapExceeded("edge_count " + std::to_string(params.edge_count) +
                      " exceeds the enumeration cap " +
                      std::to_string(options.cap));
  }
  std::vector<RatioReport> reports(seed_count);
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, seed_count)));

  auto work = [&](unsigned lane) {
    for (std::size_t i = lane; i < seed_count; i += threads) {
      const std::uint64_t seed = options.first_seed + i;
      RatioReport r = check_instance(generate(seed, params), options.cap);
      r.seed = seed;
      reports[i] = std::move(r);
    }
  };
  std::vector<std::future<void>> lanes;
  for (unsigned lane = 1; lane < threads; ++lane) {
    lanes.push_back(std::async(std::launch::async, work, lane));
  }
  work(0);
  for (auto& f : lanes) f.get();
  return reports;
}

Instance minimize_failure(Instance instance,
                          const std::function<bool(const Instance&)>& still_fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int id = 0; id < static_cast<int>(instance.edges.size()); ++id) {
      Instance candidate = remove_edge(instance, id);
      if (still_fails(candidate)) {
        instance = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return instance;
}

}  // namespace dupmatch
