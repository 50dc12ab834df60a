// Copyright 2026 The pcol Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcol/corpus.hpp"
#include "pcol/error.hpp"
#include "pcol/factorization.hpp"
#include "support.hpp"

using namespace pcol;
using namespace pcol::testing;

namespace {

void check_two_factor(const MultiGraph& g, const TwoFactor& tf) {
  int covered = 0;
  for (int c = 0; c < tf.cycle_count(); ++c) {
    const int len = tf.length(c);
    covered += len;
    // Starts at the smallest vertex.
    CHECK(tf.cycles[c][0] == *std::min_element(tf.cycles[c].begin(), tf.cycles[c].end()));
    for (int i = 0; i < len; ++i) {
      const EdgeId e = tf.edge_at(c, i);
      CHECK(g.edge(e).touches(tf.at(c, i)));
      CHECK(g.edge(e).touches(tf.at(c, i + 1)));
      CHECK_FALSE(tf.in_matching[e]);
      CHECK(tf.cycle_of_edge[e] == c);
      CHECK(tf.position[tf.at(c, i)] == i);
      CHECK(tf.cycle_of_vertex[tf.at(c, i)] == c);
    }
  }
  CHECK(covered == g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const EdgeId e = tf.matching_edge[v];
    CHECK(tf.in_matching[e]);
    CHECK(g.edge(e).other(v) == tf.partner[v]);
    CHECK(tf.cycle_of_edge[e] == -1);
  }
}

}  // namespace

TEST_CASE("perfect matchings agree with subset enumeration") {
  CHECK(enumerate_perfect_matchings(k4(), 1000).size() == 3);
  CHECK(enumerate_perfect_matchings(petersen(), 1000).size() == 6);
  CHECK(enumerate_perfect_matchings(k33(), 1000).size() == 6);
  CHECK(brute_matchings(k33()).size() == 6);
  CHECK(enumerate_perfect_matchings(theta(), 10).size() == 3);

  for (int n = 4; n <= 10; n += 2) {
    for (const MultiGraph& g : connected_cubic_graphs(n)) {
      auto want = brute_matchings(g);
      std::sort(want.begin(), want.end());
      CHECK(enumerate_perfect_matchings(g, 100000) == want);
    }
  }
}

TEST_CASE("the matching limit truncates and validates") {
  CHECK(enumerate_perfect_matchings(petersen(), 2).size() == 2);
  CHECK_THROWS_AS(enumerate_perfect_matchings(petersen(), 0), InputError);
}

TEST_CASE("two_factor_from_matching") {
  SUBCASE("Petersen: every matching leaves two 5-cycles") {
    const MultiGraph g = petersen();
    for (const auto& m : enumerate_perfect_matchings(g, 100)) {
      const TwoFactor tf = two_factor_from_matching(g, m);
      check_two_factor(g, tf);
      REQUIRE(tf.cycle_count() == 2);
      CHECK(tf.length(0) == 5);
      CHECK(tf.length(1) == 5);
      CHECK(tf.odd_cycle_count() == 2);
    }
  }
  SUBCASE("K3,3: a single 6-cycle") {
    const MultiGraph g = k33();
    for (const auto& m : enumerate_perfect_matchings(g, 100)) {
      const TwoFactor tf = two_factor_from_matching(g, m);
      check_two_factor(g, tf);
      CHECK(tf.cycle_count() == 1);
      CHECK(tf.length(0) == 6);
    }
  }
  SUBCASE("K4: one 4-cycle") {
    for (const auto& m : enumerate_perfect_matchings(k4(), 100)) {
      const TwoFactor tf = two_factor_from_matching(k4(), m);
      CHECK(tf.cycle_count() == 1);
      CHECK(tf.length(0) == 4);
    }
  }
  SUBCASE("2-cycles from parallel edges") {
    const TwoFactor tf = two_factor_from_matching(theta(), {0});
    REQUIRE(tf.cycle_count() == 1);
    CHECK(tf.length(0) == 2);
    CHECK(tf.edge_at(0, 0) == 1);  // smaller id first
    CHECK(tf.edge_at(0, 1) == 2);
  }
  SUBCASE("traversal heads to the smaller neighbour") {
    const MultiGraph g = petersen();
    const TwoFactor tf = two_factor_from_matching(g, enumerate_perfect_matchings(g, 10)[0]);
    for (int c = 0; c < tf.cycle_count(); ++c) {
      CHECK(tf.at(c, 1) < tf.at(c, -1));
    }
  }
  SUBCASE("all corpus 2-factors are well formed") {
    for (const MultiGraph& g : connected_cubic_graphs(10)) {
      for (const TwoFactor& tf : all_two_factors(g)) check_two_factor(g, tf);
    }
  }
  CHECK_THROWS_AS(two_factor_from_matching(k4(), {0}), InputError);
}

TEST_CASE("chords") {
  // Prism 3: triangles 0-1-2 and 3-4-5; take the Hamiltonian 2-factor
  // through a matching containing a rung and two triangle edges.
  const MultiGraph g = prism3();
  int chord_seen = 0;
  for (const TwoFactor& tf : all_two_factors(g)) {
    for (EdgeId e : tf.matching) {
      const bool same = tf.cycle_of_vertex[g.edge(e).u] == tf.cycle_of_vertex[g.edge(e).v];
      CHECK(tf.is_chord(g, e) == same);
      chord_seen += same ? 1 : 0;
    }
  }
  CHECK(chord_seen > 0);
}

TEST_CASE("choose_two_factor prefers a cycle of length other than 5") {
  const TwoFactor p = choose_two_factor(petersen());
  CHECK(p.cycle_count() == 2);
  CHECK(p.length(0) == 5);
  CHECK(p.length(1) == 5);

  const TwoFactor q = choose_two_factor(prism5());
  bool other = false;
  for (int c = 0; c < q.cycle_count(); ++c) other = other || q.length(c) != 5;
  CHECK(other);

  const TwoFactor k = choose_two_factor(k33());
  CHECK(k.cycle_count() == 1);
  CHECK(k.length(0) == 6);
}
