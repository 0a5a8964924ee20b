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

#include "entsum/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "entsum/access_pair.hpp"
#include "entsum/causal_conditions.hpp"
#include "entsum/ess_conditions.hpp"
#include "entsum/graph_core.hpp"
#include "entsum/protocol_sim.hpp"

namespace entsum {
namespace {

std::uint64_t state_count(GraphClassTag tag) {
  switch (tag) {
    case GraphClassTag::kOriented:
      return 3;
    case GraphClassTag::kBidirected:
      return 2;
    default:
      return 4;
  }
}

PairState digit_state(GraphClassTag tag, std::uint64_t d) {
  if (tag == GraphClassTag::kBidirected) {
    return d == 0 ? PairState::kNone : PairState::kBidirected;
  }
  return static_cast<PairState>(d);
}

std::uint64_t state_digit(GraphClassTag tag, PairState s) {
  if (tag == GraphClassTag::kBidirected) return s == PairState::kNone ? 0 : 1;
  return static_cast<std::uint64_t>(s);
}

// Lazily computed views of one instance, shared across lemmas.
class Instance {
 public:
  explicit Instance(const CausalGraph& g) : g_(g) {}

  const CausalGraph& graph() const { return g_; }
  const AccessPairGraph& apg() {
    if (!apg_) apg_ = build_access_pair_graph(g_);
    return *apg_;
  }
  const AccessStructure& access() {
    if (!access_) access_ = to_access_structure(apg());
    return *access_;
  }
  bool access_odd_cycle() {
    if (!odd_) odd_ = check_no_odd_cycles(access()).has_value();
    return *odd_;
  }
  const ConditionTable& table() {
    if (!table_) table_ = evaluate_conditions(g_);
    return *table_;
  }
  const Verdict& verdict_of() {
    if (!verdict_) verdict_ = verdict(g_);
    return *verdict_;
  }

 private:
  const CausalGraph& g_;
  std::optional<AccessPairGraph> apg_;
  std::optional<AccessStructure> access_;
  std::optional<bool> odd_;
  std::optional<ConditionTable> table_;
  std::optional<Verdict> verdict_;
};

struct Outcome {
  bool applicable = true;
  bool agree = true;
  bool noted = false;
  std::string detail;
};

Outcome not_applicable() {
  Outcome o;
  o.applicable = false;
  return o;
}

Outcome equivalence(bool lhs, bool rhs) {
  Outcome o;
  o.agree = lhs == rhs;
  if (!o.agree) {
    o.detail = "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
  }
  return o;
}

Outcome implication(bool premise, bool conclusion) {
  Outcome o;
  o.agree = !premise || conclusion;
  if (!o.agree) o.detail = "premise holds, conclusion fails";
  return o;
}

std::vector<AuthorizedPair> access_edges(const AccessPairGraph& apg) {
  std::vector<AuthorizedPair> pairs;
  for (const auto& [u, v] : apg.graph.edges()) {
    AuthorizedPair p{apg.vertices[u].key(), apg.vertices[v].key(),
                     apg.vertices[u].systems, apg.vertices[v].systems};
    if (p.second < p.first) {
      std::swap(p.first, p.second);
      std::swap(p.first_systems, p.second_systems);
    }
    pairs.push_back(std::move(p));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AuthorizedPair& x, const AuthorizedPair& y) {
              return std::tie(x.first, x.second) < std::tie(y.first, y.second);
            });
  return pairs;
}

Outcome monotone(Instance& in) {
  const CausalGraph& g = in.graph();
  if (in.verdict_of().tag != VerdictTag::kFeasible) return {};
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      const PairState s = g.state(i, j);
      if (s != PairState::kForward && s != PairState::kBackward) continue;
      CausalGraph relaxed = g;
      relaxed.set_state(i, j, PairState::kBidirected);
      if (verdict(relaxed).tag == VerdictTag::kInfeasible) {
        Outcome o;
        o.agree = false;
        o.detail = "relaxing pair " + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + " gives Infeasible";
        return o;
      }
    }
  }
  return {};
}

using LemmaFn = std::function<Outcome(Instance&)>;

const std::vector<std::pair<std::string, LemmaFn>>& lemma_table() {
  static const std::vector<std::pair<std::string, LemmaFn>> table = {
      {"noc-star",
       [](Instance& in) {
         return equivalence(!in.table().noc_pass(), in.access_odd_cycle());
       }},
      {"m1-star",
       [](Instance& in) {
         const auto& t = in.table();
         return equivalence(t.noc_pass() && t.m1_pass(),
                            !in.access_odd_cycle() && !check_M1(in.apg()));
       }},
      {"m2-star",
       [](Instance& in) {
         return equivalence(!in.table().m2_pass(),
                            check_M2(in.graph(), in.apg()).has_value());
       }},
      {"m3-star",
       [](Instance& in) {
         const auto& t = in.table();
         return equivalence(
             t.noc_pass() && t.m3_pass(),
             !in.access_odd_cycle() && !check_M3(in.graph(), in.apg()));
       }},
      {"double-star",
       [](Instance& in) {
         const auto& t = in.table();
         return equivalence(t.double_star.m1_pass() && t.double_star.m3_pass(),
                            t.all_star_pass());
       }},
      {"oriented-stars",
       [](Instance& in) {
         if (!in.graph().is_oriented()) return not_applicable();
         const bool tournament =
             check_oriented_theorem(in.graph()).tag == VerdictTag::kFeasible;
         Outcome o = implication(tournament, in.table().all_star_pass());
         o.noted = !tournament;
         return o;
       }},
      {"monogamy-no-odd-cycle",
       [](Instance& in) {
         if (!check_validity(in.access()).valid) {
           Outcome o;
           o.agree = false;
           o.detail = "invalid access structure";
           return o;
         }
         return implication(!check_monogamy(in.access()),
                            !in.access_odd_cycle());
       }},
      {"bidirected-monogamy",
       [](Instance& in) {
         if (!in.graph().is_all_bidirected()) return not_applicable();
         return equivalence(!in.access_odd_cycle(),
                            !check_monogamy(in.access()));
       }},
      {"m3-subsumes-m2",
       [](Instance& in) {
         return implication(!check_M3(in.graph(), in.apg()),
                            !check_M2(in.graph(), in.apg()));
       }},
      {"protocol",
       [](Instance& in) {
         Outcome o;
         o.agree = required_authorized_pairs(in.graph()) ==
                   access_edges(in.apg());
         if (!o.agree) o.detail = "simulated pairs differ from access edges";
         return o;
       }},
      {"consistency",
       [](Instance& in) {
         const CausalGraph& g = in.graph();
         if (!g.is_oriented() && !g.is_all_bidirected()) return not_applicable();
         const auto& t = in.table();
         const VerdictTag tag = in.verdict_of().tag;
         Outcome o;
         if (tag == VerdictTag::kUnknown) {
           o.detail = "Unknown on a characterized class";
         } else if ((!t.noc_pass() || !t.m2_pass()) &&
                    tag != VerdictTag::kInfeasible) {
           o.detail = "necessary condition fails but verdict is not Infeasible";
         } else if (t.all_star_pass() && tag != VerdictTag::kFeasible) {
           o.detail = "sufficient conditions hold but verdict is not Feasible";
         }
         o.agree = o.detail.empty();
         return o;
       }},
      {"witness",
       [](Instance& in) {
         Outcome o;
         o.agree = verify_verdict_witness(in.graph(), in.verdict_of());
         if (!o.agree) o.detail = "verdict witness rejected";
         return o;
       }},
      {"monotonicity", [](Instance& in) { return monotone(in); }},
  };
  return table;
}

template <typename Report, typename Fn>
Report run_sharded(const Workload& w, std::size_t jobs, Fn run) {
  const std::uint64_t total = workload_size(w);
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<Report> parts(jobs);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < jobs; ++k) {
    threads.emplace_back(
        [&, k] { parts[k] = run(shard_range(total, k, jobs)); });
  }
  for (auto& t : threads) t.join();
  Report out = parts[0];
  for (std::size_t k = 1; k < jobs; ++k) out = merge(out, parts[k]);
  return out;
}

}  // namespace

std::string class_name(GraphClassTag tag) {
  switch (tag) {
    case GraphClassTag::kAll:
      return "all";
    case GraphClassTag::kOriented:
      return "oriented";
    case GraphClassTag::kBidirected:
      return "bidirected";
    case GraphClassTag::kMixed:
      return "mixed";
  }
  return "?";
}

std::optional<GraphClassTag> parse_class(const std::string& name) {
  for (auto tag : {GraphClassTag::kAll, GraphClassTag::kOriented,
                   GraphClassTag::kBidirected, GraphClassTag::kMixed}) {
    if (class_name(tag) == name) return tag;
  }
  return std::nullopt;
}

std::uint64_t space_size(const GraphClass& c) {
  const std::uint64_t base = state_count(c.tag);
  const std::size_t pairs = c.n < 2 ? 0 : c.n * (c.n - 1) / 2;
  std::uint64_t size = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    size *= base;
    if (size > kEnumerationLimit) {
      throw InputTooLarge("class " + class_name(c.tag) + " with n = " +
                          std::to_string(c.n) + " exceeds the enumeration limit");
    }
  }
  return size;
}

CausalGraph graph_at(const GraphClass& c, std::uint64_t index) {
  const std::uint64_t size = space_size(c);
  if (index >= size) throw std::out_of_range("graph index out of range");
  const std::uint64_t base = state_count(c.tag);
  const std::size_t pairs = c.n < 2 ? 0 : c.n * (c.n - 1) / 2;
  std::vector<PairState> states(pairs);
  for (std::size_t p = pairs; p-- > 0;) {
    states[p] = digit_state(c.tag, index % base);
    index /= base;
  }
  return CausalGraph::from_pair_states(c.n, states);
}

bool in_class(const GraphClass& c, const CausalGraph& g) {
  if (g.vertex_count() != c.n) return false;
  switch (c.tag) {
    case GraphClassTag::kAll:
      return true;
    case GraphClassTag::kOriented:
      return g.is_oriented();
    case GraphClassTag::kBidirected:
      return g.is_all_bidirected();
    case GraphClassTag::kMixed:
      return !g.is_oriented() && !g.is_all_bidirected();
  }
  return false;
}

std::uint64_t index_of(const GraphClass& c, const CausalGraph& g) {
  if (!in_class(c, g)) {
    throw std::invalid_argument("graph is not in class " + class_name(c.tag));
  }
  space_size(c);
  const std::uint64_t base = state_count(c.tag);
  std::uint64_t index = 0;
  for (PairState s : g.pair_states()) index = index * base + state_digit(c.tag, s);
  return index;
}

std::vector<CausalGraph> enumerate_graphs(const GraphClass& c) {
  std::vector<CausalGraph> out;
  const std::uint64_t size = space_size(c);
  for (std::uint64_t k = 0; k < size; ++k) {
    CausalGraph g = graph_at(c, k);
    if (in_class(c, g)) out.push_back(std::move(g));
  }
  return out;
}

CausalGraph sample_graph(const GraphClass& c, std::uint64_t seed,
                         std::uint64_t index) {
  if (c.tag == GraphClassTag::kMixed && c.n < 3) {
    throw std::invalid_argument("mixed graphs need at least 3 vertices");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint64_t base = state_count(c.tag);
  const std::size_t pairs = c.n < 2 ? 0 : c.n * (c.n - 1) / 2;
  std::vector<PairState> states(pairs);
  while (true) {
    for (auto& s : states) s = digit_state(c.tag, rng() % base);
    CausalGraph g = CausalGraph::from_pair_states(c.n, states);
    if (in_class(c, g)) return g;
  }
}

std::uint64_t workload_size(const Workload& w) {
  return w.sample ? w.sample->count : space_size(w.cls);
}

std::optional<CausalGraph> instance_at(const Workload& w, std::uint64_t index) {
  if (w.sample) return sample_graph(w.cls, w.sample->seed, index);
  CausalGraph g = graph_at(w.cls, index);
  if (!in_class(w.cls, g)) return std::nullopt;
  return g;
}

IndexRange shard_range(std::uint64_t total, std::size_t k, std::size_t m) {
  if (m == 0 || k >= m) throw std::invalid_argument("shard index out of range");
  return {total * k / m, total * (k + 1) / m};
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : lemma_table()) v.push_back(name);
    return v;
  }();
  return names;
}

std::uint64_t CrossCheckReport::disagreements() const {
  std::uint64_t total = 0;
  for (const auto& l : lemmas) total += l.disagreements;
  return total;
}

CrossCheckReport cross_check(const Workload& w,
                             std::span<const std::string> lemmas,
                             IndexRange range) {
  std::vector<const std::pair<std::string, LemmaFn>*> selected;
  for (const auto& entry : lemma_table()) {
    if (lemmas.empty() ||
        std::find(lemmas.begin(), lemmas.end(), entry.first) != lemmas.end()) {
      selected.push_back(&entry);
    }
  }
  for (const auto& name : lemmas) {
    if (std::none_of(lemma_table().begin(), lemma_table().end(),
                     [&](const auto& e) { return e.first == name; })) {
      throw std::invalid_argument("unknown lemma: " + name);
    }
  }
  CrossCheckReport report{w, range, {}};
  for (const auto* entry : selected) {
    LemmaResult r;
    r.name = entry->first;
    report.lemmas.push_back(std::move(r));
  }

  for (std::uint64_t k = range.begin; k < range.end; ++k) {
    const auto g = instance_at(w, k);
    if (!g) continue;
    Instance in(*g);
    for (std::size_t l = 0; l < selected.size(); ++l) {
      const Outcome o = selected[l]->second(in);
      if (!o.applicable) continue;
      LemmaResult& r = report.lemmas[l];
      ++r.checked;
      if (o.noted) ++r.noted;
      if (o.agree) {
        ++r.agreements;
      } else {
        ++r.disagreements;
        if (!r.first) r.first = Counterexample{k, *g, o.detail};
      }
    }
  }
  return report;
}

CrossCheckReport cross_check(const Workload& w,
                             std::span<const std::string> lemmas) {
  return cross_check(w, lemmas, {0, workload_size(w)});
}

CrossCheckReport cross_check(const GraphClass& c,
                             std::span<const std::string> lemmas) {
  return cross_check(Workload{c, std::nullopt}, lemmas);
}

CrossCheckReport cross_check_parallel(const Workload& w,
                                      std::span<const std::string> lemmas,
                                      std::size_t jobs) {
  // Validate names before spawning workers.
  cross_check(w, lemmas, {0, 0});
  return run_sharded<CrossCheckReport>(w, jobs, [&](IndexRange r) {
    return cross_check(w, lemmas, r);
  });
}

CrossCheckReport merge(const CrossCheckReport& a, const CrossCheckReport& b) {
  if (a.lemmas.size() != b.lemmas.size()) {
    throw std::invalid_argument("merging reports over different lemma sets");
  }
  CrossCheckReport out = a;
  out.range = {std::min(a.range.begin, b.range.begin),
               std::max(a.range.end, b.range.end)};
  for (std::size_t l = 0; l < out.lemmas.size(); ++l) {
    LemmaResult& r = out.lemmas[l];
    const LemmaResult& s = b.lemmas[l];
    if (r.name != s.name) {
      throw std::invalid_argument("merging reports over different lemma sets");
    }
    r.checked += s.checked;
    r.agreements += s.agreements;
    r.disagreements += s.disagreements;
    r.noted += s.noted;
    if (s.first && (!r.first || s.first->index < r.first->index)) {
      r.first = s.first;
    }
  }
  return out;
}

VerdictCensus verdict_census(const Workload& w, IndexRange range) {
  VerdictCensus c;
  c.workload = w;
  c.range = range;
  for (std::uint64_t k = range.begin; k < range.end; ++k) {
    const auto g = instance_at(w, k);
    if (!g) continue;
    ++c.graphs;
    switch (verdict(*g).tag) {
      case VerdictTag::kFeasible:
        ++c.feasible;
        break;
      case VerdictTag::kInfeasible:
        ++c.infeasible;
        break;
      case VerdictTag::kUnknown:
        ++c.unknown;
        c.unknown_indices.push_back(k);
        break;
    }
  }
  return c;
}

VerdictCensus verdict_census(const Workload& w) {
  return verdict_census(w, {0, workload_size(w)});
}

VerdictCensus verdict_census(const GraphClass& c) {
  return verdict_census(Workload{c, std::nullopt});
}

VerdictCensus verdict_census_parallel(const Workload& w, std::size_t jobs) {
  return run_sharded<VerdictCensus>(
      w, jobs, [&](IndexRange r) { return verdict_census(w, r); });
}

VerdictCensus merge(const VerdictCensus& a, const VerdictCensus& b) {
  VerdictCensus out = a;
  out.range = {std::min(a.range.begin, b.range.begin),
               std::max(a.range.end, b.range.end)};
  out.graphs += b.graphs;
  out.feasible += b.feasible;
  out.infeasible += b.infeasible;
  out.unknown += b.unknown;
  out.unknown_indices.insert(out.unknown_indices.end(),
                             b.unknown_indices.begin(),
                             b.unknown_indices.end());
  std::sort(out.unknown_indices.begin(), out.unknown_indices.end());
  return out;
}

}  // namespace entsum
