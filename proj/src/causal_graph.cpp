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

#include "entsum/causal_graph.hpp"

#include <stdexcept>
#include <utility>
#include <string>

namespace entsum {

Relation mirror(Relation r) {
  switch (r) {
    case Relation::kExclusiveTo:
      return Relation::kExclusiveFrom;
    case Relation::kExclusiveFrom:
      return Relation::kExclusiveTo;
    default:
      return r;
  }
}

PairState mirror(PairState s) {
  switch (s) {
    case PairState::kForward:
      return PairState::kBackward;
    case PairState::kBackward:
      return PairState::kForward;
    default:
      return s;
  }
}

CausalGraph::CausalGraph(std::size_t vertex_count)
    : n_(vertex_count), arcs_(vertex_count * vertex_count, 0) {}

void CausalGraph::check_pair(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(i) +
                                ", " + std::to_string(j) + " (n = " +
                                std::to_string(n_) + ")");
  }
  if (i == j) {
    throw std::invalid_argument("self-relation on vertex " +
                                std::to_string(i));
  }
}

void CausalGraph::add_arc(Vertex from, Vertex to) {
  check_pair(from, to);
  arcs_[from * n_ + to] = 1;
}

void CausalGraph::add_bidirected(Vertex a, Vertex b) {
  check_pair(a, b);
  arcs_[a * n_ + b] = 1;
  arcs_[b * n_ + a] = 1;
}

void CausalGraph::set_state(Vertex i, Vertex j, PairState state) {
  check_pair(i, j);
  const auto s = static_cast<std::uint8_t>(state);
  arcs_[i * n_ + j] = s & 1U;
  arcs_[j * n_ + i] = (s >> 1U) & 1U;
}

PairState CausalGraph::state(Vertex i, Vertex j) const {
  check_pair(i, j);
  return static_cast<PairState>(arcs_[i * n_ + j] | (arcs_[j * n_ + i] << 1U));
}

bool CausalGraph::points_to(Vertex i, Vertex j) const {
  check_pair(i, j);
  return arcs_[i * n_ + j] != 0;
}

bool CausalGraph::exclusive(Vertex i, Vertex j) const {
  return state(i, j) == PairState::kForward;
}

bool CausalGraph::bidirected(Vertex i, Vertex j) const {
  return state(i, j) == PairState::kBidirected;
}

bool CausalGraph::adjacent(Vertex i, Vertex j) const {
  return state(i, j) != PairState::kNone;
}

bool CausalGraph::is_all_bidirected() const {
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) {
      if (arcs_[i * n_ + j] != arcs_[j * n_ + i]) return false;
    }
  }
  return true;
}

bool CausalGraph::is_oriented() const {
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) {
      if (arcs_[i * n_ + j] != 0 && arcs_[j * n_ + i] != 0) return false;
    }
  }
  return true;
}

std::size_t CausalGraph::pair_index(std::size_t n, Vertex i, Vertex j) {
  // Pairs before row i: sum_{r < i} (n - 1 - r).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

CausalGraph CausalGraph::from_pair_states(std::size_t n,
                                          std::span<const PairState> states) {
  CausalGraph g(n);
  if (states.size() != g.pair_count()) {
    throw std::invalid_argument("expected " + std::to_string(g.pair_count()) +
                                " pair states, got " +
                                std::to_string(states.size()));
  }
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.set_state(i, j, states[k++]);
  }
  return g;
}

std::vector<PairState> CausalGraph::pair_states() const {
  std::vector<PairState> out;
  out.reserve(pair_count());
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) out.push_back(state(i, j));
  }
  return out;
}

Relation relation_of(const CausalGraph& g, Vertex i, Vertex j) {
  switch (g.state(i, j)) {
    case PairState::kForward:
      return Relation::kExclusiveTo;
    case PairState::kBackward:
      return Relation::kExclusiveFrom;
    case PairState::kBidirected:
      return Relation::kBidirected;
    case PairState::kNone:
      break;
  }
  return Relation::kDisconnected;
}

EdgeSets edge_sets(const CausalGraph& g, Vertex i) {
  if (i >= g.vertex_count()) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(i));
  }
  EdgeSets sets;
  for (Vertex k = 0; k < g.vertex_count(); ++k) {
    if (k == i) continue;
    switch (g.state(i, k)) {
      case PairState::kForward:
        sets.out.push_back(k);
        break;
      case PairState::kBackward:
        sets.in.push_back(k);
        break;
      case PairState::kBidirected:
        sets.bidirected.push_back(k);
        break;
      case PairState::kNone:
        break;
    }
  }
  if (sets.out.empty()) {
    sets.out.push_back(i);
    sets.self_fallback = true;
  }
  return sets;
}

std::vector<Vertex> exclusive_out(const CausalGraph& g, Vertex i) {
  std::vector<Vertex> out;
  for (Vertex k = 0; k < g.vertex_count(); ++k) {
    if (k != i && g.exclusive(i, k)) out.push_back(k);
  }
  return out;
}

CallPattern::CallPattern(std::vector<bool> bits) : bits_(std::move(bits)) {
  std::size_t count = 0;
  for (Vertex v = 0; v < bits_.size(); ++v) {
    if (!bits_[v]) continue;
    if (count == 0) first_ = v;
    if (count == 1) second_ = v;
    ++count;
  }
  if (count != 2) {
    throw std::invalid_argument("call pattern must set exactly two bits, got " +
                                std::to_string(count));
  }
}

CallPattern CallPattern::of_pair(std::size_t n, Vertex a, Vertex b) {
  if (a >= n || b >= n || a == b) {
    throw std::invalid_argument("call pattern needs two distinct vertices in range");
  }
  std::vector<bool> bits(n, false);
  bits[a] = true;
  bits[b] = true;
  return CallPattern(std::move(bits));
}

}  // namespace entsum
