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
#include <vector>

#include "entsum/causal_graph.hpp"

namespace entsum {

/// Event in flat Minkowski spacetime, speed of light 1.
struct SpacetimePoint {
  double t = 0.0;
  std::vector<double> x;
};

/// Closed causal order: q lies in the causal future of p (lightlike
/// separation counts). Both points must have the same spatial dimension.
bool causally_precedes(const SpacetimePoint& p, const SpacetimePoint& q);

/// A call point and its return point; the diamond is J+(call) ∩ J-(ret).
struct DiamondSpec {
  SpacetimePoint call;
  SpacetimePoint ret;
};

struct SpacetimeScenario {
  std::size_t dimension = 1;
  std::vector<DiamondSpec> diamonds;
};

/// Throws std::invalid_argument when a point has the wrong dimension or a
/// diamond is empty (call not preceding its return).
void validate(const SpacetimeScenario& s);

/// Arc i -> j iff call_i precedes ret_j. Any causal curve from D_i to D_j
/// can be extended back to call_i and forward to ret_j, so the tips decide
/// diamond-level reachability.
CausalGraph causal_graph_from_spacetime(const SpacetimeScenario& s);

}  // namespace entsum
