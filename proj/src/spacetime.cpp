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

#include "entsum/spacetime.hpp"

#include <stdexcept>
#include <string>

namespace entsum {

bool causally_precedes(const SpacetimePoint& p, const SpacetimePoint& q) {
  if (p.x.size() != q.x.size()) {
    throw std::invalid_argument("points of different spatial dimension");
  }
  const double dt = q.t - p.t;
  if (dt < 0.0) return false;
  // Compare squares to keep exact lightlike cases exact.
  double dx2 = 0.0;
  for (std::size_t k = 0; k < p.x.size(); ++k) {
    const double d = q.x[k] - p.x[k];
    dx2 += d * d;
  }
  return dt * dt >= dx2;
}

void validate(const SpacetimeScenario& s) {
  for (std::size_t i = 0; i < s.diamonds.size(); ++i) {
    const auto& d = s.diamonds[i];
    if (d.call.x.size() != s.dimension || d.ret.x.size() != s.dimension) {
      throw std::invalid_argument("diamond " + std::to_string(i + 1) +
                                  ": expected " + std::to_string(s.dimension) +
                                  " spatial coordinates");
    }
    if (!causally_precedes(d.call, d.ret)) {
      throw std::invalid_argument("diamond " + std::to_string(i + 1) +
                                  " is empty: call does not precede return");
    }
  }
}

CausalGraph causal_graph_from_spacetime(const SpacetimeScenario& s) {
  validate(s);
  const std::size_t n = s.diamonds.size();
  CausalGraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && causally_precedes(s.diamonds[i].call, s.diamonds[j].ret)) {
        g.add_arc(i, j);
      }
    }
  }
  return g;
}

}  // namespace entsum
