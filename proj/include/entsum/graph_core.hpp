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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entsum/causal_graph.hpp"

namespace entsum {

/// Raised by exhaustive routines whose input exceeds their size guard.
class InputTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Simple undirected graph with sorted adjacency lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct TwoColoring {
  std::vector<std::uint8_t> color;  // 0 or 1 per vertex
};

/// Odd cycle v_0 .. v_{k-1}; the closing edge {v_{k-1}, v_0} is implicit.
struct OddCycleWitness {
  std::vector<Vertex> cycle;

  friend bool operator==(const OddCycleWitness&,
                         const OddCycleWitness&) = default;
};

/// Ordered pair (first, second) of disjoint vertex sets covering all
/// vertices, both quasi-cliques. Either side may be empty.
struct TwoQuasiCliquePartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;

  friend bool operator==(const TwoQuasiCliquePartition&,
                         const TwoQuasiCliquePartition&) = default;
  friend auto operator<=>(const TwoQuasiCliquePartition&,
                          const TwoQuasiCliquePartition&) = default;
};

/// {u, v} is an edge iff u != v and the pair carries no relation in g.
UndirectedGraph undirected_complement(const CausalGraph& g);

/// {u, v} is an edge iff the pair carries any relation in g.
UndirectedGraph undirected_skeleton(const CausalGraph& g);

/// Complement of a simple undirected graph.
UndirectedGraph complement(const UndirectedGraph& g);

/// Component id per vertex; ids are assigned in order of lowest member.
std::vector<std::size_t> connected_components(const UndirectedGraph& g);

/// BFS coloring; the lowest vertex of every component gets color 0.
std::optional<TwoColoring> two_coloring(const UndirectedGraph& g);

/// One shortest odd cycle. Among shortest cycles, the one through the
/// lowest-indexed vertex is chosen, starting there and lexicographically
/// smallest after that.
std::optional<OddCycleWitness> find_odd_cycle(const UndirectedGraph& g);

/// Shortest walk lengths from a source, split by parity. Entry is -1 when
/// no walk of that parity reaches the vertex.
struct ParityDistances {
  std::vector<long> even;
  std::vector<long> odd;
};
ParityDistances parity_distances(const UndirectedGraph& g, Vertex source);

/// Shortest walk from source to target with the given parity of length
/// (0 = even, 1 = odd, positive length required for even walks onto the
/// source itself). Empty when none exists. In a bipartite graph the
/// returned walk is a simple path.
std::vector<Vertex> shortest_parity_walk(const UndirectedGraph& g,
                                         Vertex source, Vertex target,
                                         int parity);

/// True iff a walk of even positive length joins u and v.
bool even_walk_reachable(const UndirectedGraph& g, Vertex u, Vertex v);

/// Exhaustive search for a simple path of even positive length from u to v.
/// For u == v the closed path u-x-u counts, so the answer is deg(u) > 0.
/// Guarded to graphs with at most kBruteForceLimit vertices.
inline constexpr std::size_t kBruteForceLimit = 16;
bool even_simple_path_exists_bruteforce(const UndirectedGraph& g, Vertex u,
                                        Vertex v);

/// Every distinct pair of s carries a relation in g.
bool is_quasi_clique(const CausalGraph& g, std::span<const Vertex> s);

/// Every distinct pair of s carries exactly one direction.
bool is_tournament(const CausalGraph& g, std::span<const Vertex> s);

/// Upper bound on complement components for partition enumeration.
inline constexpr std::size_t kPartitionComponentLimit = 20;

/// All ordered two-quasi-clique partitions, one per two-coloring of the
/// undirected complement (first = color 0). Empty iff the complement has an
/// odd cycle. Throws InputTooLarge above kPartitionComponentLimit
/// components.
std::vector<TwoQuasiCliquePartition> two_quasi_clique_partitions(
    const CausalGraph& g);

/**
 * Co-bipartite structure of a causal graph: the two-colorings of its
 * undirected complement, summarized by component and color.
 *
 * Answers the "same quasi-clique in every partition" question without
 * enumerating partitions. When no partition exists every pair is
 * vacuously together and no pair is separable.
 */
class ComplementParity {
 public:
  explicit ComplementParity(const CausalGraph& g);

  bool co_bipartite() const { return coloring_.has_value(); }
  const std::optional<TwoColoring>& coloring() const { return coloring_; }
  const UndirectedGraph& complement_graph() const { return complement_; }

  /// i and j share a quasi-clique in every two-quasi-clique partition.
  bool always_together(Vertex i, Vertex j) const;
  /// Some two-quasi-clique partition puts i and j on different sides.
  bool separable(Vertex i, Vertex j) const { return !always_together(i, j); }

  /// The partition read off the canonical coloring, when one exists.
  std::optional<TwoQuasiCliquePartition> canonical_partition() const;

 private:
  UndirectedGraph complement_;
  std::vector<std::size_t> component_;
  std::optional<TwoColoring> coloring_;
};

}  // namespace entsum
