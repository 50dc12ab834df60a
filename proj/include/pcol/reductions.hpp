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

#ifndef PCOL_REDUCTIONS_HPP_
#define PCOL_REDUCTIONS_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/graph.hpp"

namespace pcol {

enum class ReductionKind { kMultiEdge, kTriangle };

const char* to_string(ReductionKind k);

// One rewrite G -> G' plus what is needed to lift a colouring of G' back.
//
// kMultiEdge: parallel edges e1 < e2 join v1 < v2; spokes[i] = v_i u_i.
//   G' = G - {v1, v2} + new edge u1u2 (the last edge id of G').
// kTriangle: triangle v0 < v1 < v2, spokes[i] = v_i u_i (G ids),
//   triangle_edges[i] = v_i v_{i+1}. G' contracts the triangle to a vertex
//   x that takes over the slot of v0; spokes keep their identity.
struct ReductionRecord {
  ReductionKind kind = ReductionKind::kMultiEdge;
  MultiGraph original;
  MultiGraph reduced;

  std::vector<VertexId> vertex_map;  // G vertex -> G' vertex, or -1
  std::vector<EdgeId> edge_map;      // G edge -> G' edge, or -1 if removed

  std::array<VertexId, 3> site{-1, -1, -1};       // v1,v2 | v0,v1,v2
  std::array<VertexId, 3> outer{-1, -1, -1};      // u1,u2 | u0,u1,u2
  std::array<EdgeId, 3> spokes{-1, -1, -1};
  std::array<EdgeId, 2> parallel{-1, -1};         // e1, e2
  std::array<EdgeId, 3> triangle_edges{-1, -1, -1};
  EdgeId new_edge = -1;                           // e' in G'
};

// Rewrites the doubled pair with the smallest (v1, v2). Returns nullopt
// when g is simple; throws InputError on the 2-vertex base case.
std::optional<ReductionRecord> reduce_multi_edge(const MultiGraph& g);

// Contracts the lexicographically smallest triangle. g must be simple.
std::optional<ReductionRecord> reduce_triangle(const MultiGraph& g);

// Lifts a proper colouring of record.reduced to record.original. Both
// throw InputError on an improper input colouring.
EdgeColouring lift_multi_edge(const ReductionRecord& record,
                              const EdgeColouring& reduced_colouring);
EdgeColouring lift_triangle(const ReductionRecord& record,
                            const EdgeColouring& reduced_colouring);
EdgeColouring lift(const ReductionRecord& record,
                   const EdgeColouring& reduced_colouring);

// The colour transfer itself, on raw colour vectors with no checks.
// Unknown colours (0) propagate.
std::vector<int> lift_colours(const ReductionRecord& record,
                              std::span<const int> reduced_colours);

struct LocalLiftCheck {
  long configurations = 0;
  long improper_lifts = 0;
  long increases = 0;          // configurations where the lift added mediums
  int max_delta = 0;           // largest (medium in G) - (medium in G')
  std::vector<EdgeId> reduced_affected;   // G' edges whose class may change
  std::vector<EdgeId> original_affected;  // G edges whose class may change

  bool ok() const { return improper_lifts == 0 && increases == 0; }
};

// Enumerates every proper colouring (palette 4, up to colour renaming) of
// the G' edges that determine the classes of the affected edges, lifts it,
// and compares the medium counts on the affected sets. Edges outside the
// affected sets keep their neighbourhood and hence their class.
LocalLiftCheck check_lift_locally(const ReductionRecord& record,
                                  int palette = 4);

}  // namespace pcol

#endif  // PCOL_REDUCTIONS_HPP_
