// Copyright 2026 The entsum Authors
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

#include "entsum/ess_conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace entsum {

AccessStructure to_access_structure(const AccessPairGraph& apg) {
  AccessStructure a;
  a.authorized = apg.graph;
  for (const auto& v : apg.vertices) {
    a.systems.push_back(v.systems);
    a.names.push_back(access_vertex_name(v.key()));
  }
  return a;
}

ValidityReport check_validity(const AccessStructure& a) {
  if (a.systems.size() != a.authorized.vertex_count()) {
    throw std::invalid_argument("access structure: one subsystem set per vertex required");
  }
  for (const auto& [u, v] : a.authorized.edges()) {
    if (a.systems[u].intersects(a.systems[v])) {
      return {false, std::make_pair(u, v)};
    }
  }
  return {};
}

std::optional<OddCycleWitness> check_no_odd_cycles(const AccessStructure& a) {
  return find_odd_cycle(a.authorized);
}

std::optional<MonogamyViolation> check_monogamy(const AccessStructure& a) {
  if (!check_validity(a).valid) {
    throw std::invalid_argument("monogamy check needs a valid access structure");
  }
  const UndirectedGraph& g = a.authorized;
  if (auto cycle = find_odd_cycle(g)) {
    return MonogamyViolation{std::move(cycle->cycle)};
  }

  std::optional<MonogamyViolation> best;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const ParityDistances d = parity_distances(g, u);
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (d.even[v] == -1 || a.systems[u].intersects(a.systems[v])) continue;
      const auto len = static_cast<std::size_t>(d.even[v]);
      if (!best || len + 1 < best->path.size()) {
        best = MonogamyViolation{shortest_parity_walk(g, u, v, 0)};
      }
    }
  }
  return best;
}

bool is_monogamy_violation(const AccessStructure& a,
                           const MonogamyViolation& v) {
  const auto& p = v.path;
  if (p.size() < 3 || p.size() % 2 == 0) return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] >= a.authorized.vertex_count()) return false;
    if (std::count(p.begin(), p.end(), p[k]) != 1) return false;
    if (k > 0 && !a.authorized.has_edge(p[k - 1], p[k])) return false;
  }
  return !a.systems[p.front()].intersects(a.systems[p.back()]);
}

Realizability realizable_unknown_partner(const AccessStructure& a) {
  auto violation = check_monogamy(a);
  return {!violation.has_value(), std::move(violation)};
}

std::optional<M1Violation> check_M1(const AccessPairGraph& apg) {
  for (std::size_t w = apg.body_count; w < apg.vertex_count(); ++w) {
    const AccessVertex& wing = apg.vertices[w];
    auto walk = shortest_parity_walk(apg.graph, w, wing.owner, 1);
    if (!walk.empty()) {
      return M1Violation{wing.owner, wing.withheld, std::move(walk)};
    }
  }
  return std::nullopt;
}

std::optional<M2Violation> check_M2(const CausalGraph& g,
                                    const AccessPairGraph& apg) {
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    const auto out = exclusive_out(g, i);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        if (apg.graph.has_edge(out[a], out[b])) {
          return M2Violation{i, out[a], out[b]};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<M3Violation> check_M3(const CausalGraph& g,
                                    const AccessPairGraph& apg) {
  if (g.vertex_count() != apg.body_count) {
    throw std::invalid_argument("access-pair graph does not match causal graph");
  }
  const std::size_t n = apg.body_count;
  // A wing T_{j\i} exists exactly for i !-> j.
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t w = n; w < apg.vertex_count(); ++w) {
    out[apg.vertices[w].withheld].push_back(apg.vertices[w].owner);
  }
  for (auto& o : out) std::sort(o.begin(), o.end());

  for (Vertex i1 = 0; i1 < n; ++i1) {
    if (out[i1].empty()) continue;
    const ParityDistances d = parity_distances(apg.graph, i1);
    for (Vertex i2 = i1; i2 < n; ++i2) {
      if (out[i2].empty()) continue;
      if (i1 != i2 && d.even[i2] == -1) continue;
      for (Vertex j1 : out[i1]) {
        if (j1 == i2) continue;
        for (Vertex j2 : out[i2]) {
          if (j2 == i1 || j2 == j1) continue;
          if (i1 == i2 && j2 < j1) continue;
          if (!apg.graph.has_edge(j1, j2)) continue;
          std::vector<std::size_t> walk{i1};
          if (i1 != i2) walk = shortest_parity_walk(apg.graph, i1, i2, 0);
          return M3Violation{i1, i2, j1, j2, std::move(walk)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace entsum
