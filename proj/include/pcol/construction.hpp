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

#ifndef PCOL_CONSTRUCTION_HPP_
#define PCOL_CONSTRUCTION_HPP_

#include <string>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/factorization.hpp"
#include "pcol/graph.hpp"
#include "pcol/selection.hpp"

namespace pcol {

// For every odd cycle, the cycle edge that takes colour 3; -1 on even
// cycles. The edge touches every S-edge at its cycle: the edge between the
// two attachments at degree 2, the successor edge of the attachment at
// degree 1, the edge at positions (0, 1) at degree 0.
std::vector<EdgeId> place_colour_3(const MultiGraph& g, const TwoFactor& tf,
                                   const EdgeSelection& s);

// {1,2}-colouring of the paths left on odd cycles once colour 3 is placed,
// plus the alternating colouring of even cycles.
//
// phase[c] is the colour of the first path edge after the colour-3 edge
// (odd c) or of the edge at positions (0, 1) (even c). Phases are solved
// per S-component as a parity system with one constraint per S-edge; on an
// odd-cycle component the constraint of the smallest associated edge is
// dropped and ends up as the single medium S-edge.
struct PathColouring {
  std::vector<int> colour;            // per edge; 0 on M-edges and colour-3 edges
  std::vector<int> phase;             // per cycle, 1 or 2
  std::vector<EdgeId> medium_selected;
};

PathColouring solve_path_phases(const MultiGraph& g, const TwoFactor& tf,
                                const EdgeSelection& s,
                                const std::vector<EdgeId>& three_edges);

struct Construction {
  EdgeColouring colouring;
  std::vector<EdgeId> colour3_edge;
  std::vector<int> phase;
  std::vector<EdgeId> medium_selected;
};

// The 4-edge-colouring built from a 2-factor and an edge-selection: M in
// colour 4, one colour-3 edge per odd cycle, {1,2} elsewhere. g must be
// simple and s a valid selection for tf.
Construction construct_colouring(const MultiGraph& g, const TwoFactor& tf,
                                 const EdgeSelection& s);

// Structural checks on a constructed colouring; each entry names one
// violated property. Empty means all five properties hold.
std::vector<std::string> audit_bullets(const MultiGraph& g, const TwoFactor& tf,
                                       const EdgeSelection& s,
                                       const EdgeColouring& c);

// Number of medium cycle edges on every cycle of tf.
std::vector<int> medium_edges_per_cycle(const MultiGraph& g, const TwoFactor& tf,
                                        const EdgeColouring& c);

// Even cycles carry no medium edge, odd cycles exactly three.
std::vector<std::string> audit_cycle_mediums(const MultiGraph& g,
                                             const TwoFactor& tf,
                                             const EdgeColouring& c);

}  // namespace pcol

#endif  // PCOL_CONSTRUCTION_HPP_
