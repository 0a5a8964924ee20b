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

#include "entsum/access_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace entsum {

SubsystemSet::SubsystemSet(std::initializer_list<SystemLabel> labels) {
  for (const auto& l : labels) insert(l);
}

void SubsystemSet::insert(SystemLabel label) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) labels_.insert(it, label);
}

bool SubsystemSet::erase(SystemLabel label) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return false;
  labels_.erase(it);
  return true;
}

bool SubsystemSet::contains(SystemLabel label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool SubsystemSet::intersects(const SubsystemSet& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  while (a != labels_.end() && b != other.labels_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool SubsystemSet::strictly_within(const SubsystemSet& other) const {
  return size() < other.size() &&
         std::includes(other.labels_.begin(), other.labels_.end(),
                       labels_.begin(), labels_.end());
}

AccessVertexKey AccessVertex::key() const {
  if (kind == AccessVertexKind::kBody) return {owner, std::nullopt};
  return {owner, withheld};
}

std::string access_vertex_name(const AccessVertexKey& key) {
  std::string name = "T" + std::to_string(key.owner + 1);
  if (key.withheld) name += "\\" + std::to_string(*key.withheld + 1);
  return name;
}

std::optional<std::size_t> AccessPairGraph::find(
    const AccessVertexKey& key) const {
  if (!key.withheld) {
    if (key.owner < body_count) return key.owner;
    return std::nullopt;
  }
  for (std::size_t v = body_count; v < vertices.size(); ++v) {
    if (vertices[v].owner == key.owner &&
        vertices[v].withheld == *key.withheld) {
      return v;
    }
  }
  return std::nullopt;
}

SubsystemSet body_set(const CausalGraph& g, Vertex i) {
  const EdgeSets e = edge_sets(g, i);
  SubsystemSet t;
  for (Vertex k : e.in) t.insert({k, i});
  for (Vertex l : e.out) t.insert({i, l});
  for (Vertex b : e.bidirected) {
    t.insert({b, i});
    t.insert({i, b});
  }
  return t;
}

SubsystemSet wing_set(const CausalGraph& g, Vertex i, Vertex j) {
  if (i == j || !g.exclusive(j, i)) {
    throw std::invalid_argument(
        "wing T" + std::to_string(i + 1) + "\\" + std::to_string(j + 1) +
        " requires D" + std::to_string(j + 1) + " !-> D" +
        std::to_string(i + 1));
  }
  SubsystemSet t = body_set(g, i);
  t.erase({j, i});
  return t;
}

AccessPairGraph build_access_pair_graph(const CausalGraph& g) {
  const std::size_t n = g.vertex_count();
  AccessPairGraph apg;
  apg.body_count = n;
  for (Vertex i = 0; i < n; ++i) {
    apg.vertices.push_back({AccessVertexKind::kBody, i, i, body_set(g, i)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> wing_edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j || !g.exclusive(i, j)) continue;
      wing_edges.emplace_back(i, apg.vertices.size());
      apg.vertices.push_back({AccessVertexKind::kWing, j, i, wing_set(g, j, i)});
    }
  }
  apg.graph = UndirectedGraph(apg.vertices.size());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) apg.graph.add_edge(i, j);
    }
  }
  for (const auto& [body, wing] : wing_edges) apg.graph.add_edge(body, wing);
  return apg;
}

}  // namespace entsum
