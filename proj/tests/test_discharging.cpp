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

#include <map>

#include "pcol/construction.hpp"
#include "pcol/discharging.hpp"
#include "support.hpp"

using namespace pcol;
using namespace pcol::testing;

namespace {

struct Instance {
  MultiGraph g;
  TwoFactor tf;
  EdgeSelection s;
  EdgeColouring c;
  ChargeLedger ledger;
};

Instance run(const MultiGraph& g, const TwoFactor& tf) {
  Instance in{g, tf, find_optimal_selection(g, tf), {}, {}};
  in.c = construct_colouring(g, tf, in.s).colouring;
  in.ledger = discharge(g, tf, in.s, in.c);
  return in;
}

// Replays the log rule by rule from the initial snapshot.
void check_replay(const ChargeLedger& ledger) {
  REQUIRE(ledger.snapshots.size() == 6);
  ChargeState state = ledger.snapshots[0];
  for (int rule = 0; rule < 5; ++rule) {
    for (const Transfer& t : ledger.log) {
      if (static_cast<int>(t.rule) != rule) continue;
      if (t.from_edge) {
        state.edge[t.source] -= t.amount;
      } else {
        state.cycle[t.source] -= t.amount;
      }
      state.cycle[t.target] += t.amount;
    }
    CHECK(state == ledger.snapshots[rule + 1]);
  }
}

}  // namespace

TEST_CASE("Petersen ledger") {
  const Instance in = run(petersen(), choose_two_factor(petersen()));
  const ChargeLedger& l = in.ledger;
  CHECK(l.snapshots[0].total() == 80);
  const ChargeState& r0 = l.after(Rule::kR0);
  CHECK(r0.cycle == std::vector<Tenths>{30, 30});
  const ChargeState& r1 = l.after(Rule::kR1);
  for (Tenths x : r1.edge) CHECK(x == 0);
  CHECK(r1.total() == 80);
  check_replay(l);

  const AuditReport a = audit(l, in.g, in.tf, in.s, in.c);
  CHECK(a.passed);
  CHECK(a.failures.empty());
  CHECK(a.medium == 8);
  CHECK(a.final_total == 80);
  REQUIRE(a.components.size() == 1);
  CHECK(a.components[0].charge == 80);  // exactly 4/5 of 10 vertices
  CHECK_FALSE(a.components[0].strict);
}

TEST_CASE("transfer amounts and rule guards across the corpus") {
  long instances = 0;
  std::map<Rule, long> fired;
  for_each_instance(14, true, [&](const MultiGraph& g, const TwoFactor& tf) {
    const Instance in = run(g, tf);
    const ChargeLedger& l = in.ledger;
    check_replay(l);

    // R0 gives odd cycles 3 units and even cycles nothing.
    for (int c = 0; c < tf.cycle_count(); ++c) {
      CHECK(l.after(Rule::kR0).cycle[c] == (tf.is_odd(c) ? 30 : 0));
    }
    std::map<int, int> r2_out;
    for (const Transfer& t : l.log) {
      ++fired[t.rule];
      switch (t.rule) {
        case Rule::kR0:
          CHECK(t.from_edge);
          CHECK(t.amount == 10);
          CHECK(tf.cycle_of_edge[t.source] == t.target);
          break;
        case Rule::kR1: {
          CHECK(t.from_edge);
          CHECK(tf.in_matching[t.source]);
          const Edge& e = g.edge(t.source);
          const bool chord = tf.cycle_of_vertex[e.u] == tf.cycle_of_vertex[e.v];
          if (chord) CHECK(t.amount == 10);
          CHECK((t.amount == 5 || t.amount == 10));
          break;
        }
        case Rule::kR2:
        case Rule::kR3:
        case Rule::kR4:
          CHECK_FALSE(t.from_edge);
          CHECK(t.amount == 2);
          CHECK(tf.length(t.source) == 5);
          if (t.rule == Rule::kR2) {
            CHECK(in.s.degree_of_cycle[t.source] == 0);
            ++r2_out[t.source];
          }
          break;
      }
    }
    for (auto [cyc, count] : r2_out) CHECK(count == 5);

    const AuditReport a = audit(l, g, tf, in.s, in.c);
    CHECK(a.passed);
    for (const std::string& f : a.failures) MESSAGE(f);
    bool other_length = false;
    for (int c = 0; c < tf.cycle_count(); ++c) other_length |= tf.length(c) != 5;
    CHECK(10 * a.medium == a.final_total);
    if (other_length) CHECK(10 * a.medium < 8 * g.vertex_count());
    ++instances;
  });
  // With optimal selections R2 and R4 do not come up at this order; the
  // synthetic cases below cover them.
  CHECK(instances > 0);
  CHECK(fired[Rule::kR0] > 0);
  CHECK(fired[Rule::kR1] > 0);
  CHECK(fired[Rule::kR3] > 0);
}

namespace {

// A ledger with zero charge everywhere, positioned after R1.
ChargeLedger blank_ledger(const MultiGraph& g, const TwoFactor& tf) {
  ChargeLedger l;
  l.current.edge.assign(g.edge_count(), 0);
  l.current.cycle.assign(tf.cycle_count(), 0);
  l.snapshots.assign(3, l.current);
  return l;
}

TwoFactor factor_avoiding(const MultiGraph& g, const std::vector<std::pair<int, int>>& m) {
  Matching matching;
  for (auto [u, v] : m) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).touches(u) && g.edge(e).touches(v)) matching.push_back(e);
    }
  }
  std::sort(matching.begin(), matching.end());
  return two_factor_from_matching(g, matching);
}

}  // namespace

TEST_CASE("R2 on two 5-cycles of degree 0") {
  const MultiGraph g = petersen();
  const TwoFactor tf = choose_two_factor(g);
  const EdgeSelection s = make_selection(g, tf, {});
  ChargeLedger l = blank_ledger(g, tf);
  apply_r2_r3_r4(l, g, tf, s, EdgeColouring{4, std::vector<int>(15, 1)});
  REQUIRE(l.log.size() == 10);
  std::map<int, int> out;
  for (const Transfer& t : l.log) {
    CHECK(t.rule == Rule::kR2);
    CHECK(t.amount == 2);
    CHECK(t.source != t.target);
    ++out[t.source];
  }
  CHECK(out[0] == 5);
  CHECK(out[1] == 5);
  CHECK(l.after(Rule::kR2).cycle == std::vector<Tenths>{0, 0});
}

TEST_CASE("R3 and R4 on a hand-built configuration") {
  // A = 0..4 and B = 5..9 are 5-cycles, C = 10..15 a 6-cycle. S = {0-10,
  // 7-12}, so A and B have S-degree 1 and C has S-degree 2. The neighbour 1
  // of A's attachment faces B at 5, and B's attachment 7 is two steps from
  // 5, which is the R4 pattern. B's neighbour 6 faces C, which is R3.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 1) % 5);
  for (int i = 0; i < 6; ++i) edges.emplace_back(10 + i, 10 + (i + 1) % 6);
  const std::vector<std::pair<int, int>> m = {{0, 10}, {1, 5}, {7, 12}, {4, 8},
                                              {2, 11}, {3, 13}, {6, 14}, {9, 15}};
  edges.insert(edges.end(), m.begin(), m.end());
  const MultiGraph g = build_graph(16, edges);
  REQUIRE(g.is_cubic());
  const TwoFactor tf = factor_avoiding(g, m);
  REQUIRE(tf.cycle_count() == 3);
  const int a = tf.cycle_of_vertex[0], b = tf.cycle_of_vertex[5], c = tf.cycle_of_vertex[10];
  std::vector<EdgeId> sel;
  for (auto [u, v] : {std::pair{0, 10}, std::pair{7, 12}}) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).touches(u) && g.edge(e).touches(v)) sel.push_back(e);
    }
  }
  const EdgeSelection s = make_selection(g, tf, sel);
  REQUIRE(s.degree_of_cycle[c] == 2);

  ChargeLedger l = blank_ledger(g, tf);
  apply_r2_r3_r4(l, g, tf, s, EdgeColouring{4, std::vector<int>(g.edge_count(), 1)});
  REQUIRE(l.log.size() == 2);
  const Transfer& r3 = l.log[0];
  CHECK(r3.rule == Rule::kR3);
  CHECK(r3.source == b);
  CHECK(r3.target == c);
  CHECK(r3.via == 6);
  const Transfer& r4 = l.log[1];
  CHECK(r4.rule == Rule::kR4);
  CHECK(r4.source == a);
  CHECK(r4.target == c);
  CHECK(r4.via == 1);
  CHECK(r4.amount == 2);
  CHECK(l.snapshots.size() == 6);
}

TEST_CASE("audit catches a tampered ledger") {
  Instance in = run(petersen(), choose_two_factor(petersen()));
  in.ledger.snapshots[3].cycle[0] += 1;
  const AuditReport a = audit(in.ledger, in.g, in.tf, in.s, in.c);
  CHECK_FALSE(a.passed);
  REQUIRE(a.first_failure());
}

TEST_CASE("3-edge-colourings discharge nothing") {
  const MultiGraph g = k33();
  const TwoFactor tf = choose_two_factor(g);
  const EdgeSelection s = make_selection(g, tf, {});
  const EdgeColouring c{4, try_3_edge_colouring(g)->colour};
  const ChargeLedger l = discharge(g, tf, s, c);
  CHECK(l.log.empty());
  for (const ChargeState& st : l.snapshots) CHECK(st.total() == 0);
  CHECK(audit(l, g, tf, s, c).passed);
}
