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

#include "pcol/construction.hpp"
#include "pcol/error.hpp"
#include "support.hpp"

using namespace pcol;
using namespace pcol::testing;

namespace {

TwoFactor petersen_spokes() {
  return two_factor_from_matching(petersen(), {2, 4, 6, 8, 9});
}

// Valid selections among the eligible edges, by subset enumeration.
std::vector<EdgeSelection> all_selections(const MultiGraph& g, const TwoFactor& tf) {
  const auto elig = eligible_edges(g, tf);
  std::vector<EdgeSelection> out;
  for (unsigned mask = 0; mask < (1u << elig.size()); ++mask) {
    std::vector<EdgeId> s;
    for (size_t i = 0; i < elig.size(); ++i) {
      if (mask >> i & 1) s.push_back(elig[i]);
    }
    if (brute_is_selection(g, tf, s)) out.push_back(make_selection(g, tf, s));
  }
  return out;
}

// Flank colour on the cycle at v next to the colour-3 edge, read from a
// finished colouring.
int flank(const MultiGraph& g, const TwoFactor& tf, const EdgeColouring& c, VertexId v) {
  for (EdgeId e : g.incident(v)) {
    if (!tf.in_matching[e] && c[e] != 3) return c[e];
  }
  return 0;
}

}  // namespace

TEST_CASE("place_colour_3") {
  const MultiGraph g = petersen();
  const TwoFactor tf = petersen_spokes();
  SUBCASE("degree 0: the edge at positions 0, 1") {
    const auto three = place_colour_3(g, tf, make_selection(g, tf, {}));
    for (int c = 0; c < 2; ++c) CHECK(three[c] == tf.edge_at(c, 0));
  }
  SUBCASE("degree 1: the successor edge at the attachment") {
    const auto three = place_colour_3(g, tf, make_selection(g, tf, {4}));  // spoke 1-6
    const int outer = tf.cycle_of_vertex[1], inner = tf.cycle_of_vertex[6];
    CHECK(three[outer] == tf.edge_at(outer, tf.position[1]));
    CHECK(three[inner] == tf.edge_at(inner, tf.position[6]));
  }
  SUBCASE("degree 2: the edge between the attachments") {
    const MultiGraph h = two_pentagons_double();
    const TwoFactor f = two_factor_from_matching(h, {10, 11, 12, 13, 14});
    const auto three = place_colour_3(h, f, make_selection(h, f, {10, 11}));
    CHECK(three[f.cycle_of_vertex[0]] == 0);  // edge 0-1
    CHECK(three[f.cycle_of_vertex[5]] == 5);  // edge 5-6
  }
  SUBCASE("even cycles get none") {
    const TwoFactor k = choose_two_factor(k33());
    CHECK(place_colour_3(k33(), k, make_selection(k33(), k, {})) == std::vector<EdgeId>{-1});
  }
  CHECK_THROWS_AS(place_colour_3(g, tf, make_selection(g, tf, {2, 4})), InputError);
}

TEST_CASE("Petersen: 8 medium edges") {
  const MultiGraph g = petersen();
  const TwoFactor tf = choose_two_factor(g);
  const EdgeSelection s = find_optimal_selection(g, tf);
  const Construction c = construct_colouring(g, tf, s);
  CHECK(medium_count(g, c.colouring) == 8);
  CHECK(audit_bullets(g, tf, s, c.colouring).empty());
  CHECK(audit_cycle_mediums(g, tf, c.colouring).empty());
  CHECK(c.medium_selected.empty());
}

TEST_CASE("double edge component: both selected edges poor, fewer than 8 mediums") {
  const MultiGraph g = two_pentagons_double();
  const TwoFactor tf = two_factor_from_matching(g, {10, 11, 12, 13, 14});
  const EdgeSelection s = find_optimal_selection(g, tf);
  const Construction c = construct_colouring(g, tf, s);
  const auto classes = classify_all(g, c.colouring);
  CHECK(classes[10] == EdgeClass::kPoor);
  CHECK(classes[11] == EdgeClass::kPoor);
  CHECK(medium_count(g, c.colouring) < 8);
}

TEST_CASE("every valid selection on every 2-factor up to 10 vertices") {
  long built = 0;
  for_each_instance(10, true, [&](const MultiGraph& g, const TwoFactor& tf) {
    for (const EdgeSelection& s : all_selections(g, tf)) {
      const Construction c = construct_colouring(g, tf, s);
      CHECK(brute_proper(g, c.colouring.colour));
      CHECK(audit_bullets(g, tf, s, c.colouring).empty());
      CHECK(audit_cycle_mediums(g, tf, c.colouring).empty());
      // A selected edge is poor exactly when its two flanks agree.
      const auto classes = classify_all(g, c.colouring);
      for (EdgeId e : s.selected) {
        const bool same = flank(g, tf, c.colouring, g.edge(e).u) ==
                          flank(g, tf, c.colouring, g.edge(e).v);
        CHECK((classes[e] == EdgeClass::kPoor) == same);
        CHECK((classes[e] == EdgeClass::kMedium) == !same);
      }
      for (const SComponent& comp : s_components(g, tf, s)) {
        int mediums = 0;
        for (EdgeId e : comp.associated_edges) mediums += classes[e] == EdgeClass::kMedium;
        CHECK(mediums == (comp.is_odd_cycle() ? 1 : 0));
      }
      ++built;
    }
  });
  CHECK(built > 50);
}

TEST_CASE("optimal selections on every 2-factor up to 12 vertices") {
  for_each_instance(12, true, [&](const MultiGraph& g, const TwoFactor& tf) {
    const EdgeSelection s = find_optimal_selection(g, tf);
    const Construction c = construct_colouring(g, tf, s);
    CHECK(audit_bullets(g, tf, s, c.colouring).empty());
    CHECK(audit_cycle_mediums(g, tf, c.colouring).empty());
    CHECK(5 * medium_count(g, c.colouring) <= 4 * g.vertex_count());
  });
}

TEST_CASE("audit_bullets notices a broken colouring") {
  const MultiGraph g = petersen();
  const TwoFactor tf = choose_two_factor(g);
  const EdgeSelection s = find_optimal_selection(g, tf);
  EdgeColouring c = construct_colouring(g, tf, s).colouring;
  // Swap colours 3 and 4 everywhere: still proper, but M is now colour 3.
  for (int& x : c.colour) x = x == 3 ? 4 : x == 4 ? 3 : x;
  CHECK_FALSE(audit_bullets(g, tf, s, c).empty());
}

TEST_CASE("construction needs a simple graph") {
  const MultiGraph g = necklace4();
  const TwoFactor tf = choose_two_factor(g);
  CHECK_THROWS_AS(construct_colouring(g, tf, make_selection(g, tf, {})), InputError);
}
