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
#include <span>
#include <vector>

namespace entsum {

using Vertex = std::size_t;

/// State of an unordered vertex pair {i, j}, read relative to the ordered
/// query (i, j): kForward means i -> j only, kBackward means j -> i only.
enum class PairState : std::uint8_t {
  kNone = 0,
  kForward = 1,
  kBackward = 2,
  kBidirected = 3,
};

/// Classification of an ordered pair of distinct diamonds.
enum class Relation : std::uint8_t {
  kExclusiveTo,    // i !-> j
  kExclusiveFrom,  // j !-> i
  kBidirected,
  kDisconnected,
};

Relation mirror(Relation r);
PairState mirror(PairState s);

/**
 * Directed graph of one-round communication links between causal diamonds.
 *
 * Every unordered pair of distinct vertices carries exactly one PairState.
 * Vertices are 0-based; documents and reports use 1-based D_1..D_n.
 */
class CausalGraph {
 public:
  CausalGraph() = default;
  explicit CausalGraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }
  std::size_t pair_count() const { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  /// Adds the arc from -> to. Adding the reverse arc later makes the pair
  /// bidirected.
  void add_arc(Vertex from, Vertex to);
  void add_bidirected(Vertex a, Vertex b);
  void set_state(Vertex i, Vertex j, PairState state);

  PairState state(Vertex i, Vertex j) const;

  /// i -> j, either exclusively or as half of a bidirected pair.
  bool points_to(Vertex i, Vertex j) const;
  /// i !-> j.
  bool exclusive(Vertex i, Vertex j) const;
  bool bidirected(Vertex i, Vertex j) const;
  /// At least one direction present (i ~ j).
  bool adjacent(Vertex i, Vertex j) const;

  /// No one-way pairs.
  bool is_all_bidirected() const;
  /// No bidirected pairs.
  bool is_oriented() const;

  /// Position of pair {i, j}, i < j, in lexicographic pair order
  /// (0,1), (0,2), ..., (n-2, n-1).
  static std::size_t pair_index(std::size_t n, Vertex i, Vertex j);

  /// Builds a graph from states listed in lexicographic pair order, each
  /// read relative to (i, j) with i < j.
  static CausalGraph from_pair_states(std::size_t n,
                                      std::span<const PairState> states);
  std::vector<PairState> pair_states() const;

  friend bool operator==(const CausalGraph&, const CausalGraph&) = default;

 private:
  void check_pair(Vertex i, Vertex j) const;

  std::size_t n_ = 0;
  // Row-major n x n arc matrix, arcs_[i * n + j] != 0 iff i -> j.
  std::vector<std::uint8_t> arcs_;
};

/// Throws std::invalid_argument on i == j or out-of-range vertices.
Relation relation_of(const CausalGraph& g, Vertex i, Vertex j);

struct EdgeSets {
  std::vector<Vertex> out;         // O_i, never empty
  std::vector<Vertex> in;          // I_i
  std::vector<Vertex> bidirected;  // B_i
  bool self_fallback = false;      // out == {i} because i has no exclusive out-edge
};

/// Out/in/bidirected index sets of vertex i. When i has no exclusive
/// out-neighbour, out is the self fallback {i}, even if i has bidirected
/// neighbours.
EdgeSets edge_sets(const CausalGraph& g, Vertex i);

/// Exclusive out-neighbours of i, without the self fallback.
std::vector<Vertex> exclusive_out(const CausalGraph& g, Vertex i);

/// Call bits b_1..b_n; exactly two are set.
class CallPattern {
 public:
  /// Throws std::invalid_argument unless exactly two bits are set.
  explicit CallPattern(std::vector<bool> bits);
  /// Pattern on n vertices calling a and b (a != b).
  static CallPattern of_pair(std::size_t n, Vertex a, Vertex b);

  const std::vector<bool>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool called(Vertex v) const { return bits_.at(v); }
  /// The two called vertices, ascending.
  Vertex first() const { return first_; }
  Vertex second() const { return second_; }

 private:
  std::vector<bool> bits_;
  Vertex first_ = 0;
  Vertex second_ = 0;
};

}  // namespace entsum
