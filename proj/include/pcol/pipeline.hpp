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

#ifndef PCOL_PIPELINE_HPP_
#define PCOL_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/construction.hpp"
#include "pcol/discharging.hpp"
#include "pcol/factorization.hpp"
#include "pcol/graph.hpp"
#include "pcol/reductions.hpp"
#include "pcol/selection.hpp"

namespace pcol {

enum class Branch { kThreeColourable, kConstructed };

const char* to_string(Branch b);

// The simple triangle-free graph the construction ran on, with everything
// it was built from.
struct ConstructionLevel {
  MultiGraph graph;
  TwoFactor two_factor;
  EdgeSelection selection;
  std::vector<SComponent> components;
  Construction construction;
  AuditReport audit;
};

struct PipelineOptions {
  int matching_cap = kDefaultMatchingCap;
  // Skip the 3-edge-colouring shortcut and build the 4-colouring on every
  // reduced graph (except the 2-vertex base case).
  bool force_construction = false;
};

struct PipelineResult {
  EdgeColouring colouring;   // palette 4, on the input graph
  Branch branch = Branch::kThreeColourable;
  std::vector<ReductionRecord> reductions;   // applied in this order
  std::optional<ConstructionLevel> level;
  // medium_trace[0] is the count on the most reduced graph, then one entry
  // per lift, ending with the count on the input.
  std::vector<int> medium_trace;
  ClassCounts counts;
  int vertices = 0;
  bool is_petersen = false;
  bool bound_holds = false;    // 5 * medium <= 4n
  bool strict_holds = false;   // 5 * medium < 4n
  // Runtime assertion failures: bound, strictness off Petersen, a lift
  // that increased the medium count, a failed construction audit.
  std::vector<std::string> violations;
};

// Reduces parallel edges and triangles, colours the reduced graph (3 colours
// when possible, otherwise the 2-factor construction) and lifts the result
// back. Throws InputError when g is not a connected bridgeless cubic graph.
PipelineResult colour_graph(const MultiGraph& g, const PipelineOptions& opts = {});

}  // namespace pcol

#endif  // PCOL_PIPELINE_HPP_
