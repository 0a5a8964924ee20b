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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entsum/causal_graph.hpp"

namespace entsum {

enum class GraphClassTag { kAll, kOriented, kBidirected, kMixed };

/// Labelled causal graphs on n vertices. "mixed" walks the "all" index
/// space and keeps graphs with at least one one-way and one bidirected
/// pair.
struct GraphClass {
  GraphClassTag tag = GraphClassTag::kAll;
  std::size_t n = 0;
};

std::string class_name(GraphClassTag tag);
std::optional<GraphClassTag> parse_class(const std::string& name);

/// Exhaustive index spaces larger than this are rejected.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

/// Size of the index space: states^pairs, with 4, 3, 2, 4 states for all,
/// oriented, bidirected, mixed. Throws InputTooLarge above the limit.
std::uint64_t space_size(const GraphClass& c);

/// Graph at an index: pair states in lexicographic pair order, first pair
/// most significant. For mixed the underlying "all" graph is returned.
CausalGraph graph_at(const GraphClass& c, std::uint64_t index);
bool in_class(const GraphClass& c, const CausalGraph& g);
/// Inverse of graph_at; throws std::invalid_argument for graphs outside
/// the class.
std::uint64_t index_of(const GraphClass& c, const CausalGraph& g);

/// Every graph of the class, in index order.
std::vector<CausalGraph> enumerate_graphs(const GraphClass& c);

struct SampleSpec {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// Deterministic sample member: pair states drawn from a generator seeded
/// by (seed, index), redrawn until the graph is in the class.
CausalGraph sample_graph(const GraphClass& c, std::uint64_t seed,
                         std::uint64_t index);

/// Exhaustive class, or a seeded sample of it.
struct Workload {
  GraphClass cls;
  std::optional<SampleSpec> sample;
};

std::uint64_t workload_size(const Workload& w);
/// Absent for indices filtered out of the mixed class.
std::optional<CausalGraph> instance_at(const Workload& w, std::uint64_t index);

/// Half-open index range [begin, end).
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Shard k of m (0 <= k < m) of [0, total): contiguous, covering, in order.
IndexRange shard_range(std::uint64_t total, std::size_t k, std::size_t m);

/// Names accepted by cross_check, in report order.
const std::vector<std::string>& lemma_names();

struct Counterexample {
  std::uint64_t index = 0;
  CausalGraph graph;
  std::string detail;
};

struct LemmaResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  /// Lemma-specific observation count (oriented-stars: oriented graphs that
  /// fail the tournament condition).
  std::uint64_t noted = 0;
  std::optional<Counterexample> first;
};

struct CrossCheckReport {
  Workload workload;
  IndexRange range;
  std::vector<LemmaResult> lemmas;

  std::uint64_t disagreements() const;
};

/// Evaluates both sides of each selected lemma on every instance in the
/// range. An empty selection means all lemmas. Throws
/// std::invalid_argument on an unknown lemma name.
CrossCheckReport cross_check(const Workload& w,
                             std::span<const std::string> lemmas,
                             IndexRange range);
CrossCheckReport cross_check(const Workload& w,
                             std::span<const std::string> lemmas);
CrossCheckReport cross_check(const GraphClass& c,
                             std::span<const std::string> lemmas);
/// Runs `jobs` shards on separate threads and merges them.
CrossCheckReport cross_check_parallel(const Workload& w,
                                      std::span<const std::string> lemmas,
                                      std::size_t jobs);

/// Associative merge of reports over adjacent ranges of one workload.
CrossCheckReport merge(const CrossCheckReport& a, const CrossCheckReport& b);

struct VerdictCensus {
  Workload workload;
  IndexRange range;
  std::uint64_t graphs = 0;
  std::uint64_t feasible = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t unknown = 0;
  std::vector<std::uint64_t> unknown_indices;  // ascending
};

VerdictCensus verdict_census(const Workload& w, IndexRange range);
VerdictCensus verdict_census(const Workload& w);
VerdictCensus verdict_census(const GraphClass& c);
VerdictCensus verdict_census_parallel(const Workload& w, std::size_t jobs);
VerdictCensus merge(const VerdictCensus& a, const VerdictCensus& b);

}  // namespace entsum
