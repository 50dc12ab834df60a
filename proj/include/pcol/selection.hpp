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

#ifndef PCOL_SELECTION_HPP_
#define PCOL_SELECTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pcol/factorization.hpp"
#include "pcol/graph.hpp"

namespace pcol {

// A set S of matching edges such that
//   (1) each edge of S joins two different odd cycles,
//   (2) each cycle meets at most two edges of S, and
//   (3) two edges of S meeting the same cycle land on consecutive vertices.
struct EdgeSelection {
  std::vector<EdgeId> selected;       // sorted
  std::vector<int> degree_of_cycle;   // number of S-edges at each cycle

  int size() const { return static_cast<int>(selected.size()); }
  int degree2_count() const;
  bool contains(EdgeId e) const;
};

enum class ComponentShape { kSingleton, kPath, kCycle, kDoubleEdge };

const char* to_string(ComponentShape s);

// Cycles connected through S, and the S-edges between them. The quotient
// multigraph on `cycles` is a single vertex, a path, a cycle, or a double
// edge.
struct SComponent {
  std::vector<int> cycles;
  std::vector<EdgeId> associated_edges;
  ComponentShape shape = ComponentShape::kSingleton;

  bool is_odd_cycle() const {
    return shape == ComponentShape::kCycle && cycles.size() % 2 == 1;
  }
};

// Matching edges whose endpoints lie on two distinct odd cycles.
std::vector<EdgeId> eligible_edges(const MultiGraph& g, const TwoFactor& tf);

// Whether the endpoints of e1 and e2 on cycle c are neighbours in the
// cycle order. Throws InputError unless e1 != e2 and each of them has
// exactly one endpoint on c.
bool consecutive(const MultiGraph& g, const TwoFactor& tf, EdgeId e1,
                 EdgeId e2, int c);

// Wraps a set of edges, computing cycle degrees; no validation.
EdgeSelection make_selection(const MultiGraph& g, const TwoFactor& tf,
                             std::vector<EdgeId> edges);

// Independent re-check of the three properties. Returns a description of
// the first violation, or nullopt.
std::optional<std::string> check_selection(const MultiGraph& g,
                                           const TwoFactor& tf,
                                           const EdgeSelection& s);

// Maximum |S|, then maximum number of S-degree-2 cycles, then the
// lexicographically smallest sorted id set.
EdgeSelection find_optimal_selection(const MultiGraph& g, const TwoFactor& tf);

// Components ordered by their smallest cycle index.
std::vector<SComponent> s_components(const MultiGraph& g, const TwoFactor& tf,
                                     const EdgeSelection& s);

}  // namespace pcol

#endif  // PCOL_SELECTION_HPP_
