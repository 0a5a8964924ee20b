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

#include "entsum/causal_graph.hpp"
#include "entsum/enumeration.hpp"
#include "entsum/spacetime.hpp"
#include "fixtures.hpp"

using namespace entsum;

TEST_CASE("relation_of examples") {
  const auto g = fixtures::mixed_four();
  CHECK(relation_of(g, 1, 0) == Relation::kExclusiveTo);
  CHECK(relation_of(g, 0, 1) == Relation::kExclusiveFrom);
  CHECK(relation_of(fixtures::square(), 0, 1) == Relation::kBidirected);
  CHECK(relation_of(g, 0, 3) == Relation::kDisconnected);
  CHECK_THROWS_AS(relation_of(g, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(relation_of(g, 0, 4), std::invalid_argument);
}

TEST_CASE("relations mirror and out sets are never empty") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& g : enumerate_graphs({GraphClassTag::kAll, n})) {
      for (Vertex i = 0; i < n; ++i) {
        const EdgeSets e = edge_sets(g, i);
        REQUIRE_FALSE(e.out.empty());
        REQUIRE(e.self_fallback == (e.out == std::vector<Vertex>{i}));
        for (Vertex v : e.in) {
          REQUIRE(std::find(e.out.begin(), e.out.end(), v) == e.out.end());
          REQUIRE(std::find(e.bidirected.begin(), e.bidirected.end(), v) ==
                  e.bidirected.end());
        }
        for (Vertex j = 0; j < n; ++j) {
          if (i == j) continue;
          REQUIRE(relation_of(g, i, j) == mirror(relation_of(g, j, i)));
          REQUIRE(g.state(i, j) == mirror(g.state(j, i)));
        }
      }
    }
  }
}

TEST_CASE("edge_sets examples") {
  const auto g = fixtures::mixed_four();
  const auto e2 = edge_sets(g, 1);
  CHECK(e2.out == std::vector<Vertex>{0, 2});
  CHECK(e2.in.empty());
  CHECK(e2.bidirected.empty());
  CHECK_FALSE(e2.self_fallback);

  const auto e1 = edge_sets(g, 0);
  CHECK(e1.out == std::vector<Vertex>{0});
  CHECK(e1.in == std::vector<Vertex>{1});
  CHECK(e1.self_fallback);

  const auto p1 = edge_sets(fixtures::pentagon(), 0);
  CHECK(p1.out == std::vector<Vertex>{0});
  CHECK(p1.in.empty());
  CHECK(p1.bidirected == std::vector<Vertex>{1, 4});
}

TEST_CASE("pair states round-trip") {
  CausalGraph g(4);
  g.set_state(2, 0, PairState::kForward);
  CHECK(g.points_to(2, 0));
  CHECK(g.state(0, 2) == PairState::kBackward);
  g.add_arc(0, 2);
  CHECK(g.bidirected(0, 2));
  CHECK(CausalGraph::pair_index(4, 0, 1) == 0);
  CHECK(CausalGraph::pair_index(4, 2, 3) == 5);
  CHECK(CausalGraph::from_pair_states(4, g.pair_states()) == g);
}

TEST_CASE("call patterns need exactly two calls") {
  CHECK_THROWS_AS(CallPattern({true, false, false}), std::invalid_argument);
  CHECK_THROWS_AS(CallPattern({true, true, true}), std::invalid_argument);
  const CallPattern p({false, true, false, true});
  CHECK(p.first() == 1);
  CHECK(p.second() == 3);
  CHECK(CallPattern::of_pair(4, 3, 1).bits() == p.bits());
  CHECK_THROWS_AS(CallPattern::of_pair(3, 1, 1), std::invalid_argument);
}

TEST_CASE("spacetime examples") {
  const DiamondSpec same{{0.0, {1.0}}, {2.0, {1.0}}};
  CHECK(causal_graph_from_spacetime({1, {same, same}}).bidirected(0, 1));

  // c1 = (0, 0), r2 = (10, 8): c1 precedes r2. c2 = (9, 8), r1 = (1, 0):
  // r1 is in the past of c2, so nothing flows back.
  const DiamondSpec d1{{0.0, {0.0}}, {1.0, {0.0}}};
  const DiamondSpec d2{{9.0, {8.0}}, {10.0, {8.0}}};
  const auto g = causal_graph_from_spacetime({1, {d1, d2}});
  CHECK(g.exclusive(0, 1));

  const DiamondSpec p{{0.0, {0.0}}, {0.0, {0.0}}};
  const DiamondSpec q{{0.0, {50.0}}, {0.0, {50.0}}};
  CHECK(causal_graph_from_spacetime({1, {p, q}}).state(0, 1) == PairState::kNone);
}

TEST_CASE("lightlike separation counts as causal") {
  CHECK(causally_precedes({0.0, {0.0, 0.0}}, {5.0, {3.0, 4.0}}));
  CHECK_FALSE(causally_precedes({0.0, {0.0, 0.0}}, {5.0, {3.0, 4.1}}));
  CHECK_FALSE(causally_precedes({1.0, {0.0}}, {0.0, {0.0}}));
}

TEST_CASE("malformed scenarios are rejected") {
  const DiamondSpec empty{{1.0, {0.0}}, {1.5, {2.0}}};
  CHECK_THROWS_AS(causal_graph_from_spacetime({1, {empty}}), std::invalid_argument);
  const DiamondSpec flat{{0.0, {0.0}}, {1.0, {0.0}}};
  CHECK_THROWS_AS(causal_graph_from_spacetime({2, {flat}}), std::invalid_argument);
}
