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

// Helpers and brute-force reference implementations shared by the tests.
// Nothing here calls into the code under test beyond plain data types.

#ifndef DUPMATCH_TESTS_SUPPORT_HPP_
#define DUPMATCH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dupmatch/instance.hpp"
#include "dupmatch/value.hpp"

namespace dupmatch::testing {

inline Value V(const char* text) { return Value::parse(text); }

inline Edge make_edge(int u, int w, const char* p_u, const char* p_w,
                      const char* gamma_u, const char* delta_u,
                      const char* gamma_w, const char* delta_w,
                      bool critical = false) {
  Edge e;
  e.u = u;
  e.w = w;
  e.p_u = V(p_u);
  e.p_w = V(p_w);
  e.gamma_u = V(gamma_u);
  e.delta_u = V(delta_u);
  e.gamma_w = V(gamma_w);
  e.delta_w = V(delta_w);
  e.critical = critical;
  return e;
}

// Assigns dense ids in list order.
inline Instance make_instance(int u_count, int w_count, std::vector<Edge> edges,
                              std::vector<VertexRef> critical = {}) {
  Instance out;
  out.u_count = u_count;
  out.w_count = w_count;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i].id = static_cast<int>(i);
  }
  out.edges = std::move(edges);
  std::sort(critical.begin(), critical.end());
  out.critical_vertices = std::move(critical);
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

inline std::uint32_t mask_of(const std::vector<int>& xs) {
  std::uint32_t m = 0;
  for (int x : xs) m |= 1u << x;
  return m;
}

// Linear matroid over GF(2): element i is the bit vector vectors[i].
// Independence is linear independence, decided by elimination.
struct BinaryMatroid {
  std::vector<std::uint32_t> vectors;

  int size() const { return static_cast<int>(vectors.size()); }

  bool independent(std::uint32_t subset) const {
    std::vector<std::uint32_t> basis;
    for (int i = 0; i < size(); ++i) {
      if (!(subset & (1u << i))) continue;
      std::uint32_t v = vectors[i];
      for (std::uint32_t b : basis) v = std::min(v, v ^ b);
      if (v == 0) return false;
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
    return true;
  }

  // Every independent set as a list of element indices.
  std::vector<std::vector<int>> independent_sets() const {
    std::vector<std::vector<int>> out;
    for (std::uint32_t m = 0; m < (1u << size()); ++m) {
      if (independent(m)) out.push_back(bits_of(m));
    }
    return out;
  }

  int rank_of(std::uint32_t subset) const {
    int best = 0;
    for (std::uint32_t m = subset;; m = (m - 1) & subset) {
      if (independent(m)) best = std::max(best, __builtin_popcount(m));
      if (m == 0) break;
    }
    return best;
  }
};

inline BinaryMatroid random_binary_matroid(std::mt19937_64& rng, int n,
                                           int dims) {
  BinaryMatroid m;
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << dims) - 1);
  for (int i = 0; i < n; ++i) m.vectors.push_back(pick(rng));
  return m;
}

// Exchange axiom checked pairwise over a family given as bitmasks.
inline bool satisfies_matroid_axioms(
    const std::function<bool(std::uint32_t)>& independent, int n) {
  if (!independent(0)) return false;
  const std::uint32_t full = 1u << n;
  for (std::uint32_t a = 0; a < full; ++a) {
    if (!independent(a)) continue;
    for (int i = 0; i < n; ++i) {
      if ((a & (1u << i)) && !independent(a & ~(1u << i))) return false;
    }
    for (std::uint32_t b = 0; b < full; ++b) {
      if (!independent(b) || __builtin_popcount(b) <= __builtin_popcount(a)) {
        continue;
      }
      bool extends = false;
      for (int x = 0; x < n && !extends; ++x) {
        const std::uint32_t bit = 1u << x;
        extends = (b & bit) && !(a & bit) && independent(a | bit);
      }
      if (!extends) return false;
    }
  }
  return true;
}

// Strict two-sided preference system for brute-force stable matchings.
// rank_u[e] and rank_w[e] are positions in the endpoint lists, smaller is
// better. Edges are (u, w) pairs.
struct StrictMarket {
  int u_count = 0;
  int w_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> rank_u, rank_w;

  bool stable(const std::vector<int>& matched) const {
    std::vector<int> at_u(u_count, -1), at_w(w_count, -1);
    for (int e : matched) {
      if (at_u[edges[e].first] != -1 || at_w[edges[e].second] != -1) {
        return false;
      }
      at_u[edges[e].first] = e;
      at_w[edges[e].second] = e;
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      const int mu = at_u[edges[e].first];
      const int mw = at_w[edges[e].second];
      if (mu == e) continue;
      const bool u_wants = mu == -1 || rank_u[e] < rank_u[mu];
      const bool w_wants = mw == -1 || rank_w[e] < rank_w[mw];
      if (u_wants && w_wants) return false;
    }
    return true;
  }

  // All stable matchings, by recursion over U vertices.
  std::vector<std::vector<int>> all_stable() const {
    std::vector<std::vector<int>> by_u(u_count);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      by_u[edges[e].first].push_back(e);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<char> w_used(w_count, 0);
    std::function<void(int)> rec = [&](int u) {
      if (u == u_count) {
        std::vector<int> sorted = current;
        std::sort(sorted.begin(), sorted.end());
        if (stable(sorted)) out.push_back(sorted);
        return;
      }
      rec(u + 1);
      for (int e : by_u[u]) {
        const int w = edges[e].second;
        if (w_used[w]) continue;
        w_used[w] = 1;
        current.push_back(e);
        rec(u + 1);
        current.pop_back();
        w_used[w] = 0;
      }
    };
    rec(0);
    return out;
  }
};

}  // namespace dupmatch::testing

#endif  // DUPMATCH_TESTS_SUPPORT_HPP_
