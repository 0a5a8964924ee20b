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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "entsum/access_pair.hpp"
#include "entsum/graph_core.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace entsum;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const UndirectedGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

bool valid_odd_cycle(const UndirectedGraph& g, const OddCycleWitness& w) {
  const auto& c = w.cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  std::set<Vertex> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!g.has_edge(c[k], c[(k + 1) % c.size()])) return false;
  }
  return true;
}

// Skeleton graphs are enough for partition questions: they depend only on
// which pairs are related.
CausalGraph skeleton_graph(std::size_t n, std::uint64_t mask) {
  CausalGraph g(n);
  const auto u = oracle::graph_from_mask(n, mask);
  for (const auto& [a, b] : u.edges()) {
    if ((a + b) % 3 == 0) {
      g.add_bidirected(a, b);
    } else {
      g.add_arc(a, b);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("undirected graph rejects self-loops and bad endpoints") {
  UndirectedGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("complement of a bidirected pentagon is the pentagram") {
  const auto c = undirected_complement(fixtures::pentagon());
  const std::set<std::pair<Vertex, Vertex>> expected{
      {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  CHECK(edge_set(c) == expected);
}

TEST_CASE("complement of a complete bidirected graph is edgeless") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = undirected_complement(fixtures::complete_bidirected(n));
    CHECK(c.vertex_count() == n);
    CHECK(c.edge_count() == 0);
  }
}

TEST_CASE("complement of the bidirected square path") {
  const auto c = undirected_complement(fixtures::square());
  const std::set<std::pair<Vertex, Vertex>> expected{{0, 2}, {0, 3}, {1, 2}};
  CHECK(edge_set(c) == expected);
}

TEST_CASE("find_odd_cycle examples") {
  const auto pentagram = undirected_complement(fixtures::pentagon());
  const auto w = find_odd_cycle(pentagram);
  REQUIRE(w);
  CHECK(w->cycle.size() == 5);
  CHECK(valid_odd_cycle(pentagram, *w));
  CHECK(w->cycle == std::vector<Vertex>{0, 2, 4, 1, 3});

  UndirectedGraph edge(2);
  edge.add_edge(0, 1);
  CHECK_FALSE(find_odd_cycle(edge));
  CHECK_FALSE(find_odd_cycle(undirected_complement(fixtures::square())));
}

TEST_CASE("find_odd_cycle returns a shortest cycle") {
  // Triangle 3-4-5 and a pentagon through vertex 0.
  UndirectedGraph g(8);
  for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{
           {0, 1}, {1, 2}, {2, 6}, {6, 7}, {7, 0}, {3, 4}, {4, 5}, {5, 3}}) {
    g.add_edge(a, b);
  }
  const auto w = find_odd_cycle(g);
  REQUIRE(w);
  CHECK(w->cycle == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("two_coloring examples") {
  const auto edgeless = two_coloring(UndirectedGraph(4));
  REQUIRE(edgeless);
  CHECK(edgeless->color == std::vector<std::uint8_t>{0, 0, 0, 0});

  UndirectedGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK_FALSE(two_coloring(triangle));

  UndirectedGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  const auto c = two_coloring(path);
  REQUIRE(c);
  CHECK(c->color == std::vector<std::uint8_t>{0, 1, 0, 1});
}

TEST_CASE("coloring and odd cycle are exclusive and exhaustive") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const auto g = oracle::graph_from_mask(n, m);
      const auto c = two_coloring(g);
      const auto w = find_odd_cycle(g);
      REQUIRE(c.has_value() != w.has_value());
      if (c) {
        for (const auto& [a, b] : g.edges()) REQUIRE(c->color[a] != c->color[b]);
      } else {
        REQUIRE(valid_odd_cycle(g, *w));
      }
    }
  }
}

TEST_CASE("even_walk_reachable examples") {
  UndirectedGraph g(4);
  g.add_edge(0, 1);
  CHECK(even_walk_reachable(g, 0, 0));
  CHECK_FALSE(even_walk_reachable(g, 2, 2));
  CHECK_FALSE(even_walk_reachable(g, 0, 3));
  const auto pentagram = undirected_complement(fixtures::pentagon());
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) CHECK(even_walk_reachable(pentagram, u, v));
  }
}

TEST_CASE("shortest_parity_walk has the requested parity") {
  const auto pentagram = undirected_complement(fixtures::pentagon());
  const auto w = shortest_parity_walk(pentagram, 0, 2, 0);
  REQUIRE(w.size() == 5);
  CHECK(w.front() == 0);
  CHECK(w.back() == 2);
  for (std::size_t k = 1; k < w.size(); ++k) CHECK(pentagram.has_edge(w[k - 1], w[k]));
  CHECK(shortest_parity_walk(pentagram, 0, 2, 1) == std::vector<Vertex>{0, 2});
  CHECK(shortest_parity_walk(UndirectedGraph(2), 0, 1, 0).empty());
}

TEST_CASE("even_simple_path_exists_bruteforce examples") {
  CHECK_FALSE(even_simple_path_exists_bruteforce(UndirectedGraph(2), 0, 1));
  UndirectedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(even_simple_path_exists_bruteforce(path, 0, 2));

  const auto apg = build_access_pair_graph(fixtures::mixed_four());
  const auto w12 = apg.find({0, 1});
  const auto w32 = apg.find({2, 1});
  REQUIRE(w12);
  REQUIRE(w32);
  CHECK(even_simple_path_exists_bruteforce(apg.graph, *w12, *w32));

  CHECK_THROWS_AS(even_simple_path_exists_bruteforce(UndirectedGraph(17), 0, 1),
                  InputTooLarge);
}

TEST_CASE("bipartite shortcut matches simple-path search") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const auto g = oracle::graph_from_mask(n, m);
      const auto c = two_coloring(g);
      if (!c) continue;
      const auto comp = connected_components(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const bool shortcut = comp[u] == comp[v] && c->color[u] == c->color[v] &&
                                (u != v || g.degree(u) > 0);
          REQUIRE(oracle::even_simple_path(g, u, v) == shortcut);
          REQUIRE(even_simple_path_exists_bruteforce(g, u, v) == shortcut);
          REQUIRE(even_walk_reachable(g, u, v) == shortcut);
        }
      }
    }
  }
}

TEST_CASE("complementing the complement gives the skeleton") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::uint64_t total = 1;
    for (std::size_t p = 0; p < pairs; ++p) total *= 4;
    for (std::uint64_t k = 0; k < total; ++k) {
      std::vector<PairState> states(pairs);
      std::uint64_t x = k;
      for (auto& s : states) {
        s = static_cast<PairState>(x % 4);
        x /= 4;
      }
      const auto g = CausalGraph::from_pair_states(n, states);
      REQUIRE(complement(undirected_complement(g)) == undirected_skeleton(g));
    }
  }
}

TEST_CASE("quasi-clique and tournament examples") {
  const auto square = fixtures::square();
  const std::vector<Vertex> single{2};
  const std::vector<Vertex> d1d3{0, 2};
  const std::vector<Vertex> d1d2{0, 1};
  CHECK(is_quasi_clique(square, single));
  CHECK_FALSE(is_quasi_clique(square, d1d3));
  CHECK(is_quasi_clique(square, d1d2));

  const std::vector<Vertex> d2d3{1, 2};
  CHECK(is_tournament(fixtures::chain(), d2d3));
  CHECK_FALSE(is_tournament(square, d1d2));
  CHECK(is_tournament(square, std::vector<Vertex>{}));
}

TEST_CASE("two-quasi-clique partition examples") {
  CHECK(two_quasi_clique_partitions(fixtures::pentagon()).empty());
  const auto sq = two_quasi_clique_partitions(fixtures::square());
  const TwoQuasiCliquePartition expected{{0, 1}, {2, 3}};
  CHECK(std::find(sq.begin(), sq.end(), expected) != sq.end());
  // Every ordered split of a clique, empty sides included.
  CHECK(two_quasi_clique_partitions(fixtures::complete_bidirected(3)).size() == 8);
}

TEST_CASE("partitions are exactly the subset-scan partitions") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const auto g = skeleton_graph(n, m);
      std::set<oracle::Partition> lib;
      for (const auto& p : two_quasi_clique_partitions(g)) lib.insert({p.first, p.second});
      const auto ref = oracle::partitions_by_subsets(g);
      REQUIRE(lib == std::set<oracle::Partition>(ref.begin(), ref.end()));

      const ComplementParity cp(g);
      REQUIRE(cp.co_bipartite() == !ref.empty());
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
          REQUIRE(cp.always_together(i, j) == oracle::together_in_all(ref, i, j));
        }
      }
    }
  }
}

TEST_CASE("partition enumeration is guarded") {
  CHECK_THROWS_AS(two_quasi_clique_partitions(fixtures::complete_bidirected(21)), InputTooLarge);
}
