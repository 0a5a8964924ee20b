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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "entsum/causal_graph.hpp"
#include "entsum/graph_core.hpp"

namespace entsum {

/// Protocol subsystem Y^{from -> to}: the share prepared at `from` and
/// forwarded to `to` when `from` is not called. Self labels Y^{i -> i} only
/// come from the no-out-edge fallback.
struct SystemLabel {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const SystemLabel&, const SystemLabel&) = default;
};

/// Sorted, duplicate-free set of subsystem labels.
class SubsystemSet {
 public:
  SubsystemSet() = default;
  SubsystemSet(std::initializer_list<SystemLabel> labels);

  void insert(SystemLabel label);
  bool erase(SystemLabel label);
  bool contains(SystemLabel label) const;
  bool intersects(const SubsystemSet& other) const;
  /// Strict subset.
  bool strictly_within(const SubsystemSet& other) const;

  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  friend bool operator==(const SubsystemSet&, const SubsystemSet&) = default;
  friend auto operator<=>(const SubsystemSet&, const SubsystemSet&) = default;

 private:
  std::vector<SystemLabel> labels_;
};

enum class AccessVertexKind { kBody, kWing };

/// Name of an access-pair vertex: T_owner for bodies, T_{owner \ withheld}
/// for wings.
struct AccessVertexKey {
  Vertex owner = 0;
  std::optional<Vertex> withheld;

  friend auto operator<=>(const AccessVertexKey&,
                          const AccessVertexKey&) = default;
};

struct AccessVertex {
  AccessVertexKind kind = AccessVertexKind::kBody;
  Vertex owner = 0;
  Vertex withheld = 0;  // meaningful for wings only
  SubsystemSet systems;

  AccessVertexKey key() const;
};

/// 1-based display name: "T3" or "T3\2".
std::string access_vertex_name(const AccessVertexKey& key);

/**
 * Access-pair graph of a causal graph.
 *
 * Vertices 0..n-1 are the bodies T_0..T_{n-1}. Wings follow, one per
 * exclusive edge i !-> j, ordered by (i, j); wing T_{j\i} hangs off body
 * T_i. Body-body edges are exactly the undirected complement.
 */
struct AccessPairGraph {
  std::size_t body_count = 0;
  std::vector<AccessVertex> vertices;
  UndirectedGraph graph;

  std::size_t vertex_count() const { return vertices.size(); }
  std::optional<std::size_t> find(const AccessVertexKey& key) const;
};

/// T_i: {Y^{k->i} : k in I_i ∪ B_i} ∪ {Y^{i->l} : l in O_i ∪ B_i}.
SubsystemSet body_set(const CausalGraph& g, Vertex i);

/// T_{i\j} = T_i minus Y^{j->i}. Requires j !-> i; throws
/// std::invalid_argument otherwise.
SubsystemSet wing_set(const CausalGraph& g, Vertex i, Vertex j);

AccessPairGraph build_access_pair_graph(const CausalGraph& g);

}  // namespace entsum
