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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entsum/causal_graph.hpp"
#include "entsum/graph_core.hpp"

namespace entsum {

/// i !-> j while every two-quasi-clique partition keeps i and j together.
struct SeparationFailure {
  Vertex i = 0;
  Vertex j = 0;

  friend bool operator==(const SeparationFailure&,
                         const SeparationFailure&) = default;
};

/// i has exclusive out-edges to j < k with j, k unrelated.
struct TwoOut {
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;

  friend bool operator==(const TwoOut&, const TwoOut&) = default;
};

/// i1 and i2 always share a quasi-clique, i1 -> j1 and i2 -> j2 in the
/// relevant sense, and j1, j2 are unrelated.
struct PairedOutFailure {
  Vertex i1 = 0;
  Vertex i2 = 0;
  Vertex j1 = 0;
  Vertex j2 = 0;

  friend bool operator==(const PairedOutFailure&,
                         const PairedOutFailure&) = default;
};

/// One partition, absent iff none exists.
std::optional<TwoQuasiCliquePartition> check_NOC_star(const CausalGraph& g);

/// Lowest (i, j) with i !-> j and i, j never separated.
std::optional<SeparationFailure> check_M1_star(const CausalGraph& g);

/// Lowest (i, j, k) two-out pattern.
std::optional<TwoOut> check_M2_star(const CausalGraph& g);

/// Lowest (i1, i2, j1, j2), i1 <= i2, over exclusive edges i1 !-> j1 and
/// i2 !-> j2 with j1 != i2, j2 != i1, j1 != j2 (j1 < j2 when i1 == i2).
std::optional<PairedOutFailure> check_M3_star(const CausalGraph& g);

/// i does not receive a one-way edge from j: the pair is unrelated or
/// i !-> j.
bool not_backward(const CausalGraph& g, Vertex i, Vertex j);

struct DoubleStarReport {
  std::optional<SeparationFailure> m1;
  std::optional<PairedOutFailure> m3;

  bool m1_pass() const { return !m1; }
  bool m3_pass() const { return !m3; }
};

/// M1** and M3**: the single-star forms with !-> relaxed to not_backward.
DoubleStarReport check_double_star(const CausalGraph& g);

struct ConditionTable {
  std::optional<TwoQuasiCliquePartition> noc_star;  // holds iff present
  std::optional<SeparationFailure> m1_star;         // holds iff absent
  std::optional<TwoOut> m2_star;
  std::optional<PairedOutFailure> m3_star;
  DoubleStarReport double_star;

  bool noc_pass() const { return noc_star.has_value(); }
  bool m1_pass() const { return !m1_star; }
  bool m2_pass() const { return !m2_star; }
  bool m3_pass() const { return !m3_star; }
  bool all_star_pass() const {
    return noc_pass() && m1_pass() && m2_pass() && m3_pass();
  }
};

ConditionTable evaluate_conditions(const CausalGraph& g);

enum class VerdictTag { kFeasible, kInfeasible, kUnknown };

enum class VerdictReason {
  kBidirectedTheorem,
  kOrientedTournament,
  kMainSufficiency,
  kNocStarNecessity,
  kM2StarNecessity,
  kOpen,
};

/// S_j fails to induce a tournament: a, b in S_j are unrelated.
struct TournamentFailure {
  Vertex j = 0;
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const TournamentFailure&,
                         const TournamentFailure&) = default;
};

/// Every S_j, listed for independent re-checking.
struct TournamentCertificate {
  std::vector<std::vector<Vertex>> sets;
};

using VerdictWitness =
    std::variant<std::monostate, TwoQuasiCliquePartition, OddCycleWitness,
                 TwoOut, TournamentFailure, TournamentCertificate>;

struct Verdict {
  VerdictTag tag = VerdictTag::kUnknown;
  VerdictReason reason = VerdictReason::kOpen;
  VerdictWitness witness;
  ConditionTable conditions;
};

std::string tag_name(VerdictTag tag);
std::string reason_name(VerdictReason reason);

/// S_j = {i != j : i does not point to j}.
std::vector<Vertex> non_predecessors(const CausalGraph& g, Vertex j);

/// Requires an all-bidirected graph; throws std::invalid_argument
/// otherwise. Feasible with the canonical partition, or Infeasible with a
/// complement odd cycle.
Verdict check_bidirected_theorem(const CausalGraph& g);

/// Requires an oriented graph; throws std::invalid_argument otherwise.
/// Feasible with the S_j certificate, or Infeasible with the lowest
/// failing (j, a, b).
Verdict check_oriented_theorem(const CausalGraph& g);

/**
 * Final verdict.
 *
 * All-bidirected graphs (edgeless ones included) go to the bidirected
 * theorem and oriented graphs to the oriented theorem; an oriented
 * infeasibility that is also a two-out pattern is reported with the
 * two-out witness. Mixed graphs are Infeasible on a NOC* or M2* failure,
 * Feasible when all four star conditions hold, and Unknown otherwise.
 */
Verdict verdict(const CausalGraph& g);

/// Checks the witness against the graph alone, without trusting the
/// condition table. Unknown verdicts pass when NOC* and M2* hold and M1*
/// or M3* fails on re-evaluation.
bool verify_verdict_witness(const CausalGraph& g, const Verdict& v);

}  // namespace entsum
