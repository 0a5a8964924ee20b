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

#include <vector>

#include "entsum/access_pair.hpp"
#include "entsum/causal_graph.hpp"

namespace entsum {

enum class SimulationMode { kSharedState, kDedicatedBellPair };

enum class TraceAction { kKeep, kSend, kDiscard };

struct TraceStep {
  Vertex actor = 0;
  TraceAction action = TraceAction::kKeep;
  SystemLabel label;
  Vertex recipient = 0;  // kSend only
};

struct SimulationOutcome {
  SimulationMode mode = SimulationMode::kSharedState;
  /// One set per vertex; only the two called vertices can be nonempty, and
  /// both are empty in dedicated-Bell-pair mode.
  std::vector<SubsystemSet> delivered;
  std::vector<TraceStep> trace;
};

/**
 * One round of the summoning protocol at the level of subsystem labels.
 *
 * Vertex i starts with Y^{i->l} for every l in O_i ∪ B_i. Uncalled
 * vertices forward each label to its target; the fallback label Y^{i->i}
 * of an uncalled vertex is discarded. Called vertices keep what they hold
 * and collect arrivals. Bidirected called pairs use a dedicated Bell pair.
 */
SimulationOutcome simulate(const CausalGraph& g, const CallPattern& calls);

/// A pair of delivered sets that must be authorized, named by the
/// access-pair vertices it instantiates. first < second by key.
struct AuthorizedPair {
  AccessVertexKey first;
  AccessVertexKey second;
  SubsystemSet first_systems;
  SubsystemSet second_systems;

  friend bool operator==(const AuthorizedPair&, const AuthorizedPair&) = default;
};

/// Union over every shared-state call pattern, sorted by key pair. A called
/// vertex v is named T_{v\u} when the other called vertex u has u !-> v,
/// and T_v otherwise.
std::vector<AuthorizedPair> required_authorized_pairs(const CausalGraph& g);

}  // namespace entsum
