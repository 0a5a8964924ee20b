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

#include "fixtures.hpp"

namespace entsum::fixtures {
namespace {

void cycle(CausalGraph& g, std::size_t len) {
  for (Vertex v = 0; v < len; ++v) g.add_bidirected(v, (v + 1) % len);
}

}  // namespace

CausalGraph chain() {
  CausalGraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  return g;
}

CausalGraph square() {
  CausalGraph g(4);
  g.add_bidirected(0, 1);
  g.add_bidirected(1, 3);
  g.add_bidirected(2, 3);
  return g;
}

CausalGraph two_out() {
  CausalGraph g(3);
  g.add_arc(1, 0);
  g.add_arc(1, 2);
  return g;
}

CausalGraph pentagon() {
  CausalGraph g(5);
  cycle(g, 5);
  return g;
}

CausalGraph hexagon_diameter() {
  CausalGraph g(6);
  cycle(g, 6);
  g.add_bidirected(0, 3);
  return g;
}

CausalGraph mixed_four() {
  CausalGraph g(4);
  g.add_arc(1, 0);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  return g;
}

CausalGraph pentagon_chord() {
  CausalGraph g = pentagon();
  g.add_arc(3, 0);
  return g;
}

CausalGraph pentagon_chord_both() {
  CausalGraph g = pentagon();
  g.add_bidirected(3, 0);
  return g;
}

CausalGraph complete_bidirected(std::size_t n) {
  CausalGraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_bidirected(i, j);
  }
  return g;
}

}  // namespace entsum::fixtures
