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

#ifndef PCOL_DISCHARGING_HPP_
#define PCOL_DISCHARGING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/factorization.hpp"
#include "pcol/graph.hpp"
#include "pcol/selection.hpp"

namespace pcol {

// Charges are kept in integer tenths; 10 is one unit.
using Tenths = int;

enum class Rule { kR0, kR1, kR2, kR3, kR4 };

const char* to_string(Rule r);

struct Transfer {
  Rule rule;
  bool from_edge;       // edge -> cycle (R0, R1) or cycle -> cycle (R2-R4)
  int source;           // edge id or cycle index
  int target;           // cycle index
  Tenths amount;
  VertexId via = -1;    // vertex the charge passes through (R3, R4)
};

struct ChargeState {
  std::vector<Tenths> edge;
  std::vector<Tenths> cycle;

  Tenths total() const;
  friend bool operator==(const ChargeState&, const ChargeState&) = default;
};

// Charge bookkeeping for one (graph, 2-factor, selection, colouring).
// snapshots[0] is the initial state (one unit per medium edge); snapshot
// i+1 is the state after rule i, for R0..R4 in order.
struct ChargeLedger {
  ChargeState current;
  std::vector<ChargeState> snapshots;
  std::vector<Transfer> log;

  const ChargeState& after(Rule r) const {
    return snapshots.at(static_cast<int>(r) + 1);
  }
};

// Unit charge on every medium edge.
ChargeLedger initial_ledger(const MultiGraph& g, const TwoFactor& tf,
                            const EdgeColouring& c);

// Medium cycle edges send their unit to their cycle.
void apply_r0(ChargeLedger& ledger, const MultiGraph& g, const TwoFactor& tf,
              const EdgeColouring& c);

// Medium matching edges split their unit between the incident cycles. A
// medium chord sends its whole unit to its cycle. Throws InvariantError on
// a medium matching edge adjacent to no colour-3 edge.
void apply_r1(ChargeLedger& ledger, const MultiGraph& g, const TwoFactor& tf,
              const EdgeColouring& c);

// Cycle-to-cycle transfers of 1/5 out of length-5 odd cycles. All guards
// are structural, so the rules see the same state whether applied as one
// wave or in order; a snapshot is taken after each.
void apply_r2_r3_r4(ChargeLedger& ledger, const MultiGraph& g,
                    const TwoFactor& tf, const EdgeSelection& s,
                    const EdgeColouring& c);

// All five rules in order, starting from the initial charges.
ChargeLedger discharge(const MultiGraph& g, const TwoFactor& tf,
                       const EdgeSelection& s, const EdgeColouring& c);

struct ComponentCharge {
  std::vector<int> cycles;
  ComponentShape shape;
  int vertices = 0;
  Tenths charge = 0;
  bool strict = false;       // charge < 4/5 of vertices
};

struct AuditReport {
  bool passed = true;
  std::vector<std::string> failures;   // hard bound violations
  std::vector<std::string> warnings;   // advisory (even-cycle strictness)
  std::vector<ComponentCharge> components;
  int medium = 0;
  int vertices = 0;
  Tenths final_total = 0;

  std::optional<std::string> first_failure() const {
    if (failures.empty()) return std::nullopt;
    return failures.front();
  }
};

// Checks every bound the counting argument relies on: conservation at each
// snapshot, zero edge charge after R1, the post-R1 cycle bounds, the
// per-component 4/5 bound (strict when a member cycle has length != 5) and,
// on odd-cycle components, 5 + 13t < 3 * (sum of lengths). Also replays the
// transfer log against the snapshots.
AuditReport audit(const ChargeLedger& ledger, const MultiGraph& g,
                  const TwoFactor& tf, const EdgeSelection& s,
                  const EdgeColouring& c);

}  // namespace pcol

#endif  // PCOL_DISCHARGING_HPP_
