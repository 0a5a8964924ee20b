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

#include "entsum/causal_graph.hpp"

namespace entsum::fixtures {

// Reference graphs, built arc by arc. Comments use 1-based labels.

CausalGraph chain();                // D1 -> D2 -> D3
CausalGraph square();               // D1 <-> D2 <-> D4 <-> D3
CausalGraph two_out();              // D2 -> D1, D2 -> D3
CausalGraph pentagon();             // bidirected 5-cycle D1..D5
CausalGraph hexagon_diameter();     // bidirected 6-cycle plus H1 <-> H4
CausalGraph mixed_four();           // D2 -> D1, D2 -> D3, D3 -> D4
CausalGraph pentagon_chord();       // pentagon plus D4 -> D1
CausalGraph pentagon_chord_both();  // pentagon plus D4 <-> D1
CausalGraph complete_bidirected(std::size_t n);

}  // namespace entsum::fixtures
