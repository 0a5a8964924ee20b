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

#include <catch_amalgamated.hpp>

#include "entsum/enumeration.hpp"
#include "entsum/graph_core.hpp"
#include "fixtures.hpp"

using namespace entsum;

TEST_CASE("class sizes") {
  CHECK(enumerate_graphs({GraphClassTag::kAll, 3}).size() == 64);
  CHECK(enumerate_graphs({GraphClassTag::kOriented, 4}).size() == 729);
  CHECK(enumerate_graphs({GraphClassTag::kBidirected, 5}).size() == 1024);
  // 4^3 minus graphs lacking a one-way pair (2^3) or a bidirected pair (3^3),
  // plus the edgeless graph counted in both.
  CHECK(enumerate_graphs({GraphClassTag::kMixed, 3}).size() == 64 - 8 - 27 + 1);
  CHECK(space_size({GraphClassTag::kAll, 5}) == 1048576);
  CHECK(space_size({GraphClassTag::kBidirected, 6}) == 32768);
  CHECK_THROWS_AS(space_size({GraphClassTag::kAll, 6}), InputTooLarge);
}

TEST_CASE("enumeration order is lexicographic over pair states") {
  const GraphClass c{GraphClassTag::kAll, 3};
  const auto graphs = enumerate_graphs(c);
  for (std::size_t k = 1; k < graphs.size(); ++k) {
    REQUIRE(graphs[k - 1].pair_states() < graphs[k].pair_states());
  }
  CHECK(graphs[1].state(1, 2) == PairState::kForward);
  CHECK(graphs[16].state(0, 1) == PairState::kForward);
}

TEST_CASE("index_of inverts graph_at") {
  for (auto tag : {GraphClassTag::kAll, GraphClassTag::kOriented,
                   GraphClassTag::kBidirected}) {
    const GraphClass c{tag, 4};
    for (std::uint64_t k = 0; k < space_size(c); ++k) {
      REQUIRE(index_of(c, graph_at(c, k)) == k);
    }
  }
  CHECK_THROWS_AS(index_of({GraphClassTag::kOriented, 5}, fixtures::pentagon()),
                  std::invalid_argument);
  const GraphClass mixed{GraphClassTag::kMixed, 5};
  CHECK(graph_at(mixed, index_of(mixed, fixtures::pentagon_chord())) ==
        fixtures::pentagon_chord());
}

TEST_CASE("samples are deterministic and in class") {
  const GraphClass c{GraphClassTag::kMixed, 5};
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto g = sample_graph(c, 42, k);
    REQUIRE(in_class(c, g));
    REQUIRE(g == sample_graph(c, 42, k));
  }
  CHECK_FALSE(sample_graph(c, 42, 0) == sample_graph(c, 43, 0));
}

TEST_CASE("shards cover the range in order") {
  for (std::size_t m = 1; m <= 7; ++m) {
    std::uint64_t next = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto r = shard_range(100, k, m);
      REQUIRE(r.begin == next);
      next = r.end;
    }
    REQUIRE(next == 100);
  }
  CHECK_THROWS_AS(shard_range(10, 3, 3), std::invalid_argument);
}

TEST_CASE("cross-check finds no disagreement on small graphs") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = cross_check(GraphClass{GraphClassTag::kAll, n}, {});
    REQUIRE(r.lemmas.size() == lemma_names().size());
    CHECK(r.disagreements() == 0);
    for (const auto& l : r.lemmas) CHECK(l.agreements + l.disagreements == l.checked);
  }
}

TEST_CASE("lemma selection") {
  const std::vector<std::string> pick{"m2-star", "noc-star"};
  const auto r = cross_check(GraphClass{GraphClassTag::kAll, 3}, pick);
  REQUIRE(r.lemmas.size() == 2);
  CHECK(r.lemmas[0].name == "noc-star");
  CHECK(r.lemmas[0].checked == 64);
  const std::vector<std::string> bad{"no-such-lemma"};
  CHECK_THROWS_AS(cross_check(GraphClass{GraphClassTag::kAll, 3}, bad),
                  std::invalid_argument);
}

TEST_CASE("sharded cross-checks merge to the unsharded report") {
  const Workload w{{GraphClassTag::kAll, 4}, std::nullopt};
  const auto whole = cross_check(w, {});
  const std::uint64_t total = workload_size(w);
  auto shard = [&](std::size_t k) { return cross_check(w, {}, shard_range(total, k, 3)); };
  const auto a = shard(0);
  const auto b = shard(1);
  const auto c = shard(2);
  const auto left = merge(merge(a, b), c);
  const auto right = merge(a, merge(b, c));
  for (const auto* r : {&left, &right}) {
    REQUIRE(r->lemmas.size() == whole.lemmas.size());
    CHECK(r->range.begin == 0);
    CHECK(r->range.end == total);
    for (std::size_t l = 0; l < whole.lemmas.size(); ++l) {
      CHECK(r->lemmas[l].checked == whole.lemmas[l].checked);
      CHECK(r->lemmas[l].agreements == whole.lemmas[l].agreements);
      CHECK(r->lemmas[l].noted == whole.lemmas[l].noted);
    }
  }
  const auto par = cross_check_parallel(w, {}, 3);
  for (std::size_t l = 0; l < whole.lemmas.size(); ++l) {
    CHECK(par.lemmas[l].checked == whole.lemmas[l].checked);
  }
}

TEST_CASE("census examples") {
  const auto bi = verdict_census(GraphClass{GraphClassTag::kBidirected, 5});
  CHECK(bi.graphs == 1024);
  CHECK(bi.unknown == 0);
  const auto two = verdict_census(GraphClass{GraphClassTag::kAll, 2});
  CHECK(two.graphs == 4);
  CHECK(two.unknown == 0);
  CHECK(two.feasible + two.infeasible == 4);
}

TEST_CASE("census is deterministic and shardable") {
  const Workload w{{GraphClassTag::kMixed, 4}, std::nullopt};
  const auto a = verdict_census(w);
  const auto b = verdict_census_parallel(w, 4);
  CHECK(a.graphs == b.graphs);
  CHECK(a.feasible == b.feasible);
  CHECK(a.infeasible == b.infeasible);
  CHECK(a.unknown_indices == b.unknown_indices);
  CHECK(a.unknown == a.unknown_indices.size());
}

TEST_CASE("sampled workloads") {
  const Workload w{{GraphClassTag::kAll, 5}, SampleSpec{300, 7}};
  CHECK(workload_size(w) == 300);
  const auto r1 = cross_check(w, {});
  const auto r2 = cross_check(w, {});
  CHECK(r1.disagreements() == 0);
  for (std::size_t l = 0; l < r1.lemmas.size(); ++l) {
    CHECK(r1.lemmas[l].checked == r2.lemmas[l].checked);
  }
}
