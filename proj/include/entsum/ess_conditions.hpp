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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entsum/access_pair.hpp"
#include "entsum/causal_graph.hpp"
#include "entsum/graph_core.hpp"

namespace entsum {

/// Pair access structure with no unauthorized pairs: one subsystem set per
/// vertex, one authorized edge per pairing.
struct AccessStructure {
  UndirectedGraph authorized;
  std::vector<SubsystemSet> systems;
  std::vector<std::string> names;  // optional, for reports
};

AccessStructure to_access_structure(const AccessPairGraph& apg);

struct ValidityReport {
  bool valid = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending_edge;
};

/// Valid iff every authorized pair has disjoint subsystem sets; reports
/// the lowest offending edge otherwise.
ValidityReport check_validity(const AccessStructure& a);

/// Simple path with an even, positive number of edges whose endpoint sets
/// are disjoint.
struct MonogamyViolation {
  std::vector<std::size_t> path;

  std::size_t front() const { return path.front(); }
  std::size_t back() const { return path.back(); }
};

/**
 * Monogamy check for a valid structure.
 *
 * With an odd cycle present, the cycle minus its closing edge is returned:
 * an even path whose endpoints are authorized together, hence disjoint.
 * Otherwise the structure is bipartite and every simple path between two
 * vertices has the parity of their colors, so only same-colored pairs in a
 * component need their sets intersected. The shortest such violation is
 * reported, ties broken by lowest endpoint pair.
 *
 * Throws std::invalid_argument on an invalid structure.
 */
std::optional<MonogamyViolation> check_monogamy(const AccessStructure& a);

/// Independent verification of a reported violation.
bool is_monogamy_violation(const AccessStructure& a,
                           const MonogamyViolation& v);

std::optional<OddCycleWitness> check_no_odd_cycles(const AccessStructure& a);

struct Realizability {
  bool realizable = false;
  std::optional<MonogamyViolation> violation;
};

/// Unknown-partner realizability: holds iff monogamy holds. Throws
/// std::invalid_argument on an invalid structure.
Realizability realizable_unknown_partner(const AccessStructure& a);

// Conditions on access-pair graphs built from a causal graph. "Path"
// parity is computed over walks; under no-odd-cycles this coincides with
// simple-path parity, which is the regime where the conditions matter.

/// Wing T_{owner\withheld} reaches its own body T_owner by an odd walk.
struct M1Violation {
  Vertex owner = 0;
  Vertex withheld = 0;
  std::vector<std::size_t> walk;  // access-pair vertex ids, wing first
};
std::optional<M1Violation> check_M1(const AccessPairGraph& apg);

/// Body T_i has two exclusive out-neighbours j1 < j2 with {T_j1, T_j2}
/// authorized.
struct M2Violation {
  Vertex i = 0;
  Vertex j1 = 0;
  Vertex j2 = 0;

  friend bool operator==(const M2Violation&, const M2Violation&) = default;
};
std::optional<M2Violation> check_M2(const CausalGraph& g,
                                    const AccessPairGraph& apg);

/// Bodies T_i1, T_i2 (i1 <= i2) joined by an even walk (trivially when
/// i1 == i2), with exclusive out-neighbours j1 of i1 and j2 of i2,
/// j1 != i2, j2 != i1, j1 != j2, and {T_j1, T_j2} authorized. Exclusive
/// out-neighbours are read off the wings of the access-pair graph.
struct M3Violation {
  Vertex i1 = 0;
  Vertex i2 = 0;
  Vertex j1 = 0;
  Vertex j2 = 0;
  std::vector<std::size_t> walk;  // T_i1 .. T_i2
};
std::optional<M3Violation> check_M3(const CausalGraph& g,
                                    const AccessPairGraph& apg);

}  // namespace entsum
