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

#include "entsum/causal_conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace entsum {
namespace {

template <typename Rel>
std::optional<SeparationFailure> separation_check(const CausalGraph& g,
                                                  const ComplementParity& cp,
                                                  Rel rel) {
  const std::size_t n = g.vertex_count();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && rel(i, j) && cp.always_together(i, j)) {
        return SeparationFailure{i, j};
      }
    }
  }
  return std::nullopt;
}

template <typename Rel>
std::optional<PairedOutFailure> paired_out_check(const CausalGraph& g,
                                                 const ComplementParity& cp,
                                                 Rel rel) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && rel(i, j)) out[i].push_back(j);
    }
  }
  for (Vertex i1 = 0; i1 < n; ++i1) {
    for (Vertex i2 = i1; i2 < n; ++i2) {
      if (!cp.always_together(i1, i2)) continue;
      for (Vertex j1 : out[i1]) {
        if (j1 == i2) continue;
        for (Vertex j2 : out[i2]) {
          if (j2 == i1 || j2 == j1) continue;
          if (i1 == i2 && j2 < j1) continue;
          if (!g.adjacent(j1, j2)) return PairedOutFailure{i1, i2, j1, j2};
        }
      }
    }
  }
  return std::nullopt;
}

bool valid_partition(const CausalGraph& g, const TwoQuasiCliquePartition& p) {
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto* side : {&p.first, &p.second}) {
    for (Vertex v : *side) {
      if (v >= seen.size() || seen[v]++ != 0) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) !=
      static_cast<long>(seen.size())) {
    return false;
  }
  return is_quasi_clique(g, p.first) && is_quasi_clique(g, p.second);
}

bool valid_complement_cycle(const CausalGraph& g, const OddCycleWitness& w) {
  const auto& c = w.cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] >= g.vertex_count()) return false;
    if (std::count(c.begin(), c.end(), c[k]) != 1) return false;
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (g.adjacent(c[k], c[(k + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace

std::optional<TwoQuasiCliquePartition> check_NOC_star(const CausalGraph& g) {
  return ComplementParity(g).canonical_partition();
}

std::optional<SeparationFailure> check_M1_star(const CausalGraph& g) {
  return separation_check(g, ComplementParity(g), [&](Vertex i, Vertex j) {
    return g.exclusive(i, j);
  });
}

std::optional<TwoOut> check_M2_star(const CausalGraph& g) {
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    const auto out = exclusive_out(g, i);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        if (!g.adjacent(out[a], out[b])) return TwoOut{i, out[a], out[b]};
      }
    }
  }
  return std::nullopt;
}

std::optional<PairedOutFailure> check_M3_star(const CausalGraph& g) {
  return paired_out_check(g, ComplementParity(g), [&](Vertex i, Vertex j) {
    return g.exclusive(i, j);
  });
}

bool not_backward(const CausalGraph& g, Vertex i, Vertex j) {
  return !g.points_to(j, i);
}

DoubleStarReport check_double_star(const CausalGraph& g) {
  const ComplementParity cp(g);
  auto rel = [&](Vertex i, Vertex j) { return not_backward(g, i, j); };
  return {separation_check(g, cp, rel), paired_out_check(g, cp, rel)};
}

ConditionTable evaluate_conditions(const CausalGraph& g) {
  const ComplementParity cp(g);
  auto excl = [&](Vertex i, Vertex j) { return g.exclusive(i, j); };
  auto nb = [&](Vertex i, Vertex j) { return not_backward(g, i, j); };
  ConditionTable t;
  t.noc_star = cp.canonical_partition();
  t.m1_star = separation_check(g, cp, excl);
  t.m2_star = check_M2_star(g);
  t.m3_star = paired_out_check(g, cp, excl);
  t.double_star = {separation_check(g, cp, nb), paired_out_check(g, cp, nb)};
  return t;
}

std::string tag_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::kFeasible:
      return "Feasible";
    case VerdictTag::kInfeasible:
      return "Infeasible";
    case VerdictTag::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string reason_name(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::kBidirectedTheorem:
      return "bidirected-theorem";
    case VerdictReason::kOrientedTournament:
      return "oriented-tournament";
    case VerdictReason::kMainSufficiency:
      return "main-sufficiency";
    case VerdictReason::kNocStarNecessity:
      return "NOC*-necessity";
    case VerdictReason::kM2StarNecessity:
      return "M2*-necessity/two-out";
    case VerdictReason::kOpen:
      return "open";
  }
  return "?";
}

std::vector<Vertex> non_predecessors(const CausalGraph& g, Vertex j) {
  std::vector<Vertex> s;
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (i != j && !g.points_to(i, j)) s.push_back(i);
  }
  return s;
}

Verdict check_bidirected_theorem(const CausalGraph& g) {
  if (!g.is_all_bidirected()) {
    throw std::invalid_argument("bidirected theorem needs an all-bidirected graph");
  }
  const ComplementParity cp(g);
  Verdict v;
  v.reason = VerdictReason::kBidirectedTheorem;
  if (auto p = cp.canonical_partition()) {
    v.tag = VerdictTag::kFeasible;
    v.witness = std::move(*p);
  } else {
    v.tag = VerdictTag::kInfeasible;
    v.witness = *find_odd_cycle(cp.complement_graph());
  }
  return v;
}

Verdict check_oriented_theorem(const CausalGraph& g) {
  if (!g.is_oriented()) {
    throw std::invalid_argument("oriented theorem needs a graph without bidirected pairs");
  }
  Verdict v;
  v.reason = VerdictReason::kOrientedTournament;
  TournamentCertificate cert;
  for (Vertex j = 0; j < g.vertex_count(); ++j) {
    auto s = non_predecessors(g, j);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (!g.adjacent(s[a], s[b])) {
          v.tag = VerdictTag::kInfeasible;
          v.witness = TournamentFailure{j, s[a], s[b]};
          return v;
        }
      }
    }
    cert.sets.push_back(std::move(s));
  }
  v.tag = VerdictTag::kFeasible;
  v.witness = std::move(cert);
  return v;
}

Verdict verdict(const CausalGraph& g) {
  ConditionTable table = evaluate_conditions(g);
  Verdict v;
  if (g.is_all_bidirected()) {
    v = check_bidirected_theorem(g);
  } else if (g.is_oriented()) {
    v = check_oriented_theorem(g);
    if (v.tag == VerdictTag::kInfeasible && table.m2_star) {
      v.reason = VerdictReason::kM2StarNecessity;
      v.witness = *table.m2_star;
    }
  } else if (!table.noc_pass()) {
    v.tag = VerdictTag::kInfeasible;
    v.reason = VerdictReason::kNocStarNecessity;
    v.witness = *find_odd_cycle(undirected_complement(g));
  } else if (!table.m2_pass()) {
    v.tag = VerdictTag::kInfeasible;
    v.reason = VerdictReason::kM2StarNecessity;
    v.witness = *table.m2_star;
  } else if (table.all_star_pass()) {
    v.tag = VerdictTag::kFeasible;
    v.reason = VerdictReason::kMainSufficiency;
    v.witness = *table.noc_star;
  } else {
    v.tag = VerdictTag::kUnknown;
    v.reason = VerdictReason::kOpen;
  }
  v.conditions = std::move(table);
  return v;
}

bool verify_verdict_witness(const CausalGraph& g, const Verdict& v) {
  const std::size_t n = g.vertex_count();
  if (v.tag == VerdictTag::kUnknown) {
    if (!std::holds_alternative<std::monostate>(v.witness)) return false;
    return check_NOC_star(g) && !check_M2_star(g) &&
           (check_M1_star(g) || check_M3_star(g));
  }
  if (const auto* p = std::get_if<TwoQuasiCliquePartition>(&v.witness)) {
    return v.tag == VerdictTag::kFeasible && valid_partition(g, *p);
  }
  if (const auto* c = std::get_if<OddCycleWitness>(&v.witness)) {
    return v.tag == VerdictTag::kInfeasible && valid_complement_cycle(g, *c);
  }
  if (const auto* t = std::get_if<TwoOut>(&v.witness)) {
    return v.tag == VerdictTag::kInfeasible && t->i < n && t->j < n &&
           t->k < n && t->j != t->k && t->i != t->j && t->i != t->k &&
           g.exclusive(t->i, t->j) && g.exclusive(t->i, t->k) &&
           !g.adjacent(t->j, t->k);
  }
  if (const auto* f = std::get_if<TournamentFailure>(&v.witness)) {
    return v.tag == VerdictTag::kInfeasible && g.is_oriented() && f->j < n &&
           f->a < n && f->b < n && f->a != f->b && f->a != f->j &&
           f->b != f->j && !g.points_to(f->a, f->j) &&
           !g.points_to(f->b, f->j) && !g.adjacent(f->a, f->b);
  }
  if (const auto* c = std::get_if<TournamentCertificate>(&v.witness)) {
    if (v.tag != VerdictTag::kFeasible || !g.is_oriented() ||
        c->sets.size() != n) {
      return false;
    }
    for (Vertex j = 0; j < n; ++j) {
      std::vector<Vertex> s;
      for (Vertex i = 0; i < n; ++i) {
        if (i != j && !g.points_to(i, j)) s.push_back(i);
      }
      if (s != c->sets[j] || !is_tournament(g, s)) return false;
    }
    return true;
  }
  return false;
}

}  // namespace entsum
