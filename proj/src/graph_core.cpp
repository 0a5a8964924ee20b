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

#include "entsum/graph_core.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

namespace entsum {

namespace {

void check_vertex(const UndirectedGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t vertex_count)
    : adjacency_(vertex_count) {}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

UndirectedGraph undirected_complement(const CausalGraph& g) {
  UndirectedGraph out(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      if (!g.adjacent(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

UndirectedGraph undirected_skeleton(const CausalGraph& g) {
  UndirectedGraph out(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      if (g.adjacent(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  UndirectedGraph out(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      if (!g.has_edge(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> connected_components(const UndirectedGraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> component(g.vertex_count(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (component[root] != kUnset) continue;
    component[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (component[w] == kUnset) {
          component[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return component;
}

std::optional<TwoColoring> two_coloring(const UndirectedGraph& g) {
  constexpr std::uint8_t kUncolored = 2;
  TwoColoring result{std::vector<std::uint8_t>(g.vertex_count(), kUncolored)};
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (result.color[root] != kUncolored) continue;
    result.color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (result.color[w] == kUncolored) {
          result.color[w] = static_cast<std::uint8_t>(1 - result.color[u]);
          queue.push_back(w);
        } else if (result.color[w] == result.color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return result;
}

ParityDistances parity_distances(const UndirectedGraph& g, Vertex source) {
  check_vertex(g, source);
  ParityDistances d{std::vector<long>(g.vertex_count(), -1),
                    std::vector<long>(g.vertex_count(), -1)};
  d.even[source] = 0;
  std::deque<std::pair<Vertex, int>> queue{{source, 0}};
  while (!queue.empty()) {
    const auto [u, p] = queue.front();
    queue.pop_front();
    const long du = p == 0 ? d.even[u] : d.odd[u];
    auto& next = p == 0 ? d.odd : d.even;
    for (Vertex w : g.neighbors(u)) {
      if (next[w] == -1) {
        next[w] = du + 1;
        queue.emplace_back(w, 1 - p);
      }
    }
  }
  return d;
}

std::vector<Vertex> shortest_parity_walk(const UndirectedGraph& g,
                                         Vertex source, Vertex target,
                                         int parity) {
  check_vertex(g, source);
  check_vertex(g, target);
  parity &= 1;
  if (source == target && parity == 0) {
    if (g.degree(source) == 0) return {};
    return {source, g.neighbors(source).front(), source};
  }
  // State s = 2 * vertex + parity; parent links for reconstruction.
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t states = 2 * g.vertex_count();
  std::vector<std::size_t> parent(states, kNone);
  std::vector<bool> seen(states, false);
  std::deque<std::size_t> queue{2 * source};
  seen[2 * source] = true;
  const std::size_t goal = 2 * target + static_cast<std::size_t>(parity);
  while (!queue.empty() && !seen[goal]) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const Vertex u = s / 2;
    const std::size_t flip = 1 - s % 2;
    for (Vertex w : g.neighbors(u)) {
      const std::size_t t = 2 * w + flip;
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        queue.push_back(t);
      }
    }
  }
  if (!seen[goal]) return {};
  std::vector<Vertex> walk;
  for (std::size_t s = goal; s != kNone; s = parent[s]) walk.push_back(s / 2);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

bool even_walk_reachable(const UndirectedGraph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return g.degree(u) > 0;
  return parity_distances(g, u).even[v] != -1;
}

std::optional<OddCycleWitness> find_odd_cycle(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  long best = -1;
  Vertex start = 0;
  ParityDistances from_start;
  for (Vertex s = 0; s < n; ++s) {
    ParityDistances d = parity_distances(g, s);
    if (d.odd[s] != -1 && (best == -1 || d.odd[s] < best)) {
      best = d.odd[s];
      start = s;
      from_start = std::move(d);
    }
  }
  if (best == -1) return std::nullopt;

  // A shortest odd closed walk is a simple cycle, so building the
  // lexicographically smallest closed walk of that length through `start`
  // yields the canonical cycle. Distances are symmetric, so distances from
  // `start` also bound the walk back to it.
  const auto len = static_cast<std::size_t>(best);
  OddCycleWitness witness;
  witness.cycle.push_back(start);
  Vertex current = start;
  for (std::size_t step = 1; step < len; ++step) {
    const long remaining = static_cast<long>(len - step);
    const auto& back = remaining % 2 == 0 ? from_start.even : from_start.odd;
    bool moved = false;
    for (Vertex w : g.neighbors(current)) {
      if (back[w] != -1 && back[w] <= remaining) {
        witness.cycle.push_back(w);
        current = w;
        moved = true;
        break;
      }
    }
    assert(moved);
    (void)moved;
  }
  return witness;
}

bool even_simple_path_exists_bruteforce(const UndirectedGraph& g, Vertex u,
                                        Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (g.vertex_count() > kBruteForceLimit) {
    throw InputTooLarge("exhaustive path search limited to " +
                        std::to_string(kBruteForceLimit) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  }
  if (u == v) return g.degree(u) > 0;

  std::vector<bool> on_path(g.vertex_count(), false);
  // Depth-first over simple paths; returns as soon as v is hit at even depth.
  auto dfs = [&](auto&& self, Vertex x, std::size_t depth) -> bool {
    for (Vertex w : g.neighbors(x)) {
      if (on_path[w]) continue;
      if (w == v) {
        if ((depth + 1) % 2 == 0) return true;
        continue;
      }
      on_path[w] = true;
      const bool found = self(self, w, depth + 1);
      on_path[w] = false;
      if (found) return true;
    }
    return false;
  };
  on_path[u] = true;
  return dfs(dfs, u, 0);
}

bool is_quasi_clique(const CausalGraph& g, std::span<const Vertex> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] != s[b] && !g.adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

bool is_tournament(const CausalGraph& g, std::span<const Vertex> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) continue;
      const PairState st = g.state(s[a], s[b]);
      if (st != PairState::kForward && st != PairState::kBackward) return false;
    }
  }
  return true;
}

std::vector<TwoQuasiCliquePartition> two_quasi_clique_partitions(
    const CausalGraph& g) {
  const UndirectedGraph comp = undirected_complement(g);
  const auto coloring = two_coloring(comp);
  if (!coloring) return {};
  const auto component = connected_components(comp);
  const std::size_t count =
      component.empty()
          ? 0
          : *std::max_element(component.begin(), component.end()) + 1;
  if (count > kPartitionComponentLimit) {
    throw InputTooLarge("partition enumeration limited to " +
                        std::to_string(kPartitionComponentLimit) +
                        " complement components, got " + std::to_string(count));
  }
  std::vector<TwoQuasiCliquePartition> out;
  out.reserve(std::size_t{1} << count);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    TwoQuasiCliquePartition p;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const bool flipped = ((mask >> component[v]) & 1U) != 0;
      const bool side = (coloring->color[v] != 0) != flipped;
      (side ? p.second : p.first).push_back(v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

ComplementParity::ComplementParity(const CausalGraph& g)
    : complement_(undirected_complement(g)),
      component_(connected_components(complement_)),
      coloring_(two_coloring(complement_)) {}

bool ComplementParity::always_together(Vertex i, Vertex j) const {
  if (i >= component_.size() || j >= component_.size()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (i == j || !coloring_) return true;
  return component_[i] == component_[j] &&
         coloring_->color[i] == coloring_->color[j];
}

std::optional<TwoQuasiCliquePartition> ComplementParity::canonical_partition()
    const {
  if (!coloring_) return std::nullopt;
  TwoQuasiCliquePartition p;
  for (Vertex v = 0; v < component_.size(); ++v) {
    (coloring_->color[v] == 0 ? p.first : p.second).push_back(v);
  }
  return p;
}

}  // namespace entsum
