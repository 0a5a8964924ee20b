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

#include "entsum/protocol_sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace entsum {

SimulationOutcome simulate(const CausalGraph& g, const CallPattern& calls) {
  const std::size_t n = g.vertex_count();
  if (calls.size() != n) {
    throw std::invalid_argument("call pattern size does not match graph");
  }
  SimulationOutcome out;
  out.delivered.assign(n, SubsystemSet{});
  if (g.bidirected(calls.first(), calls.second())) {
    out.mode = SimulationMode::kDedicatedBellPair;
    return out;
  }
  for (Vertex i = 0; i < n; ++i) {
    const EdgeSets e = edge_sets(g, i);
    std::vector<Vertex> targets = e.out;
    targets.insert(targets.end(), e.bidirected.begin(), e.bidirected.end());
    std::sort(targets.begin(), targets.end());
    for (Vertex t : targets) {
      const SystemLabel label{i, t};
      if (calls.called(i)) {
        out.trace.push_back({i, TraceAction::kKeep, label, i});
        out.delivered[i].insert(label);
      } else if (t == i) {
        out.trace.push_back({i, TraceAction::kDiscard, label, i});
      } else {
        out.trace.push_back({i, TraceAction::kSend, label, t});
        if (calls.called(t)) out.delivered[t].insert(label);
      }
    }
  }
  return out;
}

std::vector<AuthorizedPair> required_authorized_pairs(const CausalGraph& g) {
  const std::size_t n = g.vertex_count();
  auto name = [&](Vertex v, Vertex other) {
    AccessVertexKey key{v, std::nullopt};
    if (g.exclusive(other, v)) key.withheld = other;
    return key;
  };
  std::vector<AuthorizedPair> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const auto o = simulate(g, CallPattern::of_pair(n, a, b));
      if (o.mode == SimulationMode::kDedicatedBellPair) continue;
      AuthorizedPair p{name(a, b), name(b, a), o.delivered[a], o.delivered[b]};
      if (p.second < p.first) {
        std::swap(p.first, p.second);
        std::swap(p.first_systems, p.second_systems);
      }
      pairs.push_back(std::move(p));
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AuthorizedPair& x, const AuthorizedPair& y) {
              return std::tie(x.first, x.second) < std::tie(y.first, y.second);
            });
  return pairs;
}

}  // namespace entsum
