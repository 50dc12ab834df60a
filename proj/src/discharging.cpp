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

#include "pcol/discharging.hpp"

#include <numeric>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

namespace {

constexpr Tenths kUnit = 10;
constexpr Tenths kHalf = 5;
constexpr Tenths kFifth = 2;

void send(ChargeLedger& ledger, Rule rule, bool from_edge, int source,
          int target, Tenths amount, VertexId via = -1) {
  if (from_edge) {
    ledger.current.edge[source] -= amount;
  } else {
    ledger.current.cycle[source] -= amount;
  }
  ledger.current.cycle[target] += amount;
  ledger.log.push_back({rule, from_edge, source, target, amount, via});
}

// Whether the colour-3 edge of v's cycle is incident to v.
bool touches_colour_3(const TwoFactor& tf, const EdgeColouring& c, VertexId v) {
  const int cyc = tf.cycle_of_vertex[v];
  const int p = tf.position[v];
  return c[tf.edge_at(cyc, p - 1)] == 3 || c[tf.edge_at(cyc, p)] == 3;
}

// The unique vertex of cycle cyc incident to an S-edge, or -1.
VertexId selected_vertex(const TwoFactor& tf, const EdgeSelection& s, int cyc) {
  for (VertexId v : tf.cycles[cyc]) {
    if (s.contains(tf.matching_edge[v])) return v;
  }
  return -1;
}

}  // namespace

const char* to_string(Rule r) {
  switch (r) {
    case Rule::kR0: return "R0";
    case Rule::kR1: return "R1";
    case Rule::kR2: return "R2";
    case Rule::kR3: return "R3";
    case Rule::kR4: return "R4";
  }
  return "?";
}

Tenths ChargeState::total() const {
  return std::accumulate(edge.begin(), edge.end(), 0) +
         std::accumulate(cycle.begin(), cycle.end(), 0);
}

ChargeLedger initial_ledger(const MultiGraph& g, const TwoFactor& tf,
                            const EdgeColouring& c) {
  ChargeLedger ledger;
  ledger.current.edge.assign(g.edge_count(), 0);
  ledger.current.cycle.assign(tf.cycle_count(), 0);
  const auto classes = classify_all(g, c);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (classes[e] == EdgeClass::kMedium) ledger.current.edge[e] = kUnit;
  }
  ledger.snapshots.push_back(ledger.current);
  return ledger;
}

void apply_r0(ChargeLedger& ledger, const MultiGraph& g, const TwoFactor& tf,
              const EdgeColouring& c) {
  const auto classes = classify_all(g, c);
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    for (EdgeId e : tf.cycle_edges[cyc]) {
      if (classes[e] == EdgeClass::kMedium) send(ledger, Rule::kR0, true, e, cyc, kUnit);
    }
  }
  ledger.snapshots.push_back(ledger.current);
}

void apply_r1(ChargeLedger& ledger, const MultiGraph& g, const TwoFactor& tf,
              const EdgeColouring& c) {
  const auto classes = classify_all(g, c);
  for (EdgeId e : tf.matching) {
    if (classes[e] != EdgeClass::kMedium) continue;
    const Edge& ed = g.edge(e);
    const int cu = tf.cycle_of_vertex[ed.u], cv = tf.cycle_of_vertex[ed.v];
    const bool at_u = touches_colour_3(tf, c, ed.u);
    const bool at_v = touches_colour_3(tf, c, ed.v);
    if (!at_u && !at_v) {
      throw InvariantError("medium matching edge " + std::to_string(e) +
                           " is adjacent to no colour-3 edge");
    }
    if (cu == cv) {
      send(ledger, Rule::kR1, true, e, cu, kUnit);
    } else if (at_u && at_v) {
      send(ledger, Rule::kR1, true, e, cu, kHalf);
      send(ledger, Rule::kR1, true, e, cv, kHalf);
    } else {
      const int near = at_u ? cu : cv;
      const int far = at_u ? cv : cu;
      if (!tf.is_odd(far)) {
        send(ledger, Rule::kR1, true, e, near, kHalf);
        send(ledger, Rule::kR1, true, e, far, kHalf);
      } else {
        send(ledger, Rule::kR1, true, e, near, kUnit);
      }
    }
  }
  ledger.snapshots.push_back(ledger.current);
}

void apply_r2_r3_r4(ChargeLedger& ledger, const MultiGraph& g,
                    const TwoFactor& tf, const EdgeSelection& s,
                    const EdgeColouring& c) {
  (void)g;
  (void)c;
  const auto& deg = s.degree_of_cycle;
  auto five_deg1 = [&](int cyc) { return tf.length(cyc) == 5 && deg[cyc] == 1; };

  // R2: a 5-cycle of degree 0 feeds the cycle across each of its vertices.
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    if (tf.length(cyc) != 5 || deg[cyc] != 0) continue;
    for (VertexId v : tf.cycles[cyc]) {
      send(ledger, Rule::kR2, false, cyc, tf.cycle_of_vertex[tf.partner[v]],
           kFifth, v);
    }
  }
  ledger.snapshots.push_back(ledger.current);

  // R3 and R4 look at the two cycle-neighbours of the S-attachment of a
  // 5-cycle of degree 1.
  for (Rule rule : {Rule::kR3, Rule::kR4}) {
    for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
      if (!five_deg1(cyc)) continue;
      const VertexId a = selected_vertex(tf, s, cyc);
      const int p = tf.position[a];
      for (VertexId vi : {tf.at(cyc, p - 1), tf.at(cyc, p + 1)}) {
        const VertexId across = tf.partner[vi];
        const int other = tf.cycle_of_vertex[across];
        if (!five_deg1(other)) {
          if (rule == Rule::kR3) send(ledger, rule, false, cyc, other, kFifth, vi);
          continue;
        }
        if (rule != Rule::kR4) continue;
        const VertexId u2 = selected_vertex(tf, s, other);
        const int dist = ((tf.position[u2] - tf.position[across]) % 5 + 5) % 5;
        if (dist != 2 && dist != 3) continue;
        const int target = tf.cycle_of_vertex[tf.partner[u2]];
        if (deg[target] == 2) send(ledger, rule, false, cyc, target, kFifth, vi);
      }
    }
    ledger.snapshots.push_back(ledger.current);
  }
}

ChargeLedger discharge(const MultiGraph& g, const TwoFactor& tf,
                       const EdgeSelection& s, const EdgeColouring& c) {
  ChargeLedger ledger = initial_ledger(g, tf, c);
  apply_r0(ledger, g, tf, c);
  apply_r1(ledger, g, tf, c);
  apply_r2_r3_r4(ledger, g, tf, s, c);
  return ledger;
}

namespace {

std::string tenths_str(Tenths t) {
  std::string sign = t < 0 ? "-" : "";
  if (t < 0) t = -t;
  return sign + std::to_string(t / 10) + "." + std::to_string(t % 10);
}

}  // namespace

AuditReport audit(const ChargeLedger& ledger, const MultiGraph& g,
                  const TwoFactor& tf, const EdgeSelection& s,
                  const EdgeColouring& c) {
  AuditReport r;
  auto fail = [&](std::string msg) {
    r.passed = false;
    r.failures.push_back(std::move(msg));
  };
  r.medium = medium_count(g, c);
  r.vertices = g.vertex_count();
  if (ledger.snapshots.size() != 6) {
    fail("ledger has " + std::to_string(ledger.snapshots.size()) +
         " snapshots, expected 6 (initial, R0..R4)");
    return r;
  }
  const ChargeState& after_r0 = ledger.snapshots[1];
  const ChargeState& after_r1 = ledger.snapshots[2];
  const ChargeState& final_state = ledger.snapshots[5];
  r.final_total = final_state.total();

  static const char* kNames[] = {"initial", "R0", "R1", "R2", "R3", "R4"};
  for (size_t i = 0; i < ledger.snapshots.size(); ++i) {
    if (ledger.snapshots[i].total() != kUnit * r.medium) {
      fail(std::string("conservation fails after ") + kNames[i] + ": total " +
           tenths_str(ledger.snapshots[i].total()) + " vs " +
           std::to_string(r.medium) + " medium edges");
    }
  }
  if (!(ledger.current == final_state)) fail("current state differs from last snapshot");

  // Replaying the log must reproduce every snapshot.
  {
    ChargeState replay = ledger.snapshots[0];
    size_t next = 0;
    for (int rule = 0; rule < 5; ++rule) {
      while (next < ledger.log.size() &&
             static_cast<int>(ledger.log[next].rule) == rule) {
        const Transfer& t = ledger.log[next++];
        if (t.amount != kUnit && t.amount != kHalf && t.amount != kFifth) {
          fail("transfer of " + tenths_str(t.amount) + " is not 1, 1/2 or 1/5");
        }
        (t.from_edge ? replay.edge : replay.cycle)[t.source] -= t.amount;
        replay.cycle[t.target] += t.amount;
      }
      if (!(replay == ledger.snapshots[rule + 1])) {
        fail(std::string("log replay disagrees with the snapshot after ") + kNames[rule + 1]);
      }
    }
    if (next != ledger.log.size()) fail("transfer log is not ordered by rule");
  }

  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    const Tenths expected = tf.is_odd(cyc) ? 3 * kUnit : 0;
    if (after_r0.cycle[cyc] != expected) {
      fail("cycle " + std::to_string(cyc) + " holds " +
           tenths_str(after_r0.cycle[cyc]) + " after R0, expected " +
           tenths_str(expected));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (after_r1.edge[e] != 0) {
      fail("edge " + std::to_string(e) + " keeps charge " +
           tenths_str(after_r1.edge[e]) + " after R1");
    }
  }
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    const Tenths charge = after_r1.cycle[cyc];
    const int len = tf.length(cyc);
    Tenths limit;
    std::string what;
    if (!tf.is_odd(cyc)) {
      limit = kHalf * len;
      what = "even cycle bound |C|/2";
    } else {
      static const Tenths kOddLimit[] = {5 * kUnit, 4 * kUnit, 35};
      limit = kOddLimit[s.degree_of_cycle[cyc]];
      what = "odd cycle of S-degree " + std::to_string(s.degree_of_cycle[cyc]);
    }
    if (charge > limit) {
      fail("cycle " + std::to_string(cyc) + " holds " + tenths_str(charge) +
           " after R1, above the " + what + " limit " + tenths_str(limit));
    }
  }

  for (const SComponent& comp : s_components(g, tf, s)) {
    ComponentCharge cc;
    cc.cycles = comp.cycles;
    cc.shape = comp.shape;
    bool all_five = true;
    long sum_len = 0;
    for (int cyc : comp.cycles) {
      cc.vertices += tf.length(cyc);
      cc.charge += final_state.cycle[cyc];
      all_five = all_five && tf.length(cyc) == 5;
      sum_len += tf.length(cyc);
    }
    const Tenths limit = 8 * cc.vertices;  // 4/5 per vertex, in tenths
    cc.strict = cc.charge < limit;
    const std::string name = "component {cycles from " +
                             std::to_string(comp.cycles.front()) + ", " +
                             to_string(comp.shape) + "}";
    if (cc.charge > limit) {
      fail(name + " holds " + tenths_str(cc.charge) + " > 4/5 of " +
           std::to_string(cc.vertices) + " vertices");
    } else if (!all_five && !cc.strict) {
      const bool even_singleton = comp.cycles.size() == 1 && !tf.is_odd(comp.cycles[0]);
      std::string msg = name + " reaches 4/5 exactly despite a cycle of length != 5";
      if (even_singleton) {
        r.warnings.push_back(msg);
      } else {
        fail(msg);
      }
    }
    if (comp.is_odd_cycle()) {
      const long t = static_cast<long>(comp.cycles.size());
      if (!(5 + 13 * t < 3 * sum_len)) {
        fail(name + ": 5 + 13t < 3 * sum of lengths fails with t = " +
             std::to_string(t) + ", sum = " + std::to_string(sum_len));
      }
      const long bound = kUnit * (3 * t + 1) + kFifth * (sum_len - 2 * t);
      if (cc.charge > bound) {
        fail(name + " holds " + tenths_str(cc.charge) +
             ", above 3t + 1 + sum (l_i - 2)/5 = " + tenths_str(bound));
      }
    }
    r.components.push_back(cc);
  }

  if (kUnit * r.medium > 8 * r.vertices) {
    fail(std::to_string(r.medium) + " medium edges exceed 4/5 of " +
         std::to_string(r.vertices) + " vertices");
  }
  return r;
}

}  // namespace pcol
