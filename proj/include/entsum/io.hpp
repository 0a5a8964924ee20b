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
#include <stdexcept>
#include <string>
#include <string_view>

#include "entsum/access_pair.hpp"
#include "entsum/causal_conditions.hpp"
#include "entsum/causal_graph.hpp"
#include "entsum/enumeration.hpp"
#include "entsum/protocol_sim.hpp"
#include "entsum/spacetime.hpp"

namespace entsum {

/// Malformed document; what() is prefixed with "line N: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Graph document:
 *
 *   # comment
 *   vertices 3
 *   1 -> 2
 *   2 <-> 3
 *
 * Indices are 1-based. Each pair may be declared once; "j -> i" after
 * "i -> j" is a conflict, not a bidirected edge.
 */
CausalGraph parse_graph(std::string_view text);

/// Canonical document: header, then pairs in ascending (i, j) order.
std::string serialize_graph(const CausalGraph& g);

/// Scenario document: "minkowski d=D" then one "call t x.. return t x.."
/// line per diamond. Diamond nonemptiness is checked.
SpacetimeScenario parse_scenario(std::string_view text);

std::string export_dot(const CausalGraph& g);
std::string export_dot(const AccessPairGraph& apg);

enum class ReportFormat { kText, kRecord };

std::string format_label(const SystemLabel& label);
std::string format_set(const SubsystemSet& s);
std::string format_partition(const TwoQuasiCliquePartition& p);
std::string format_witness(const VerdictWitness& w);

std::string render_verdict(const Verdict& v, ReportFormat f);
std::string render_access_graph(const AccessPairGraph& apg, ReportFormat f);
std::string render_simulation(const CallPattern& calls,
                              const SimulationOutcome& o, ReportFormat f);
/// Record lines: lemma, class, n, checked, failed.
std::string render_cross_check(const CrossCheckReport& r, ReportFormat f);
std::string render_census(const VerdictCensus& c, ReportFormat f);

}  // namespace entsum
