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

#ifndef PCOL_ORACLE_HPP_
#define PCOL_ORACLE_HPP_

#include <functional>
#include <optional>

#include "pcol/colouring.hpp"
#include "pcol/graph.hpp"
#include "pcol/petersen.hpp"

namespace pcol {

// Exhaustive edge-colouring searches. Edges are coloured in breadth-first
// order from vertex 0. An edge's class is final once it and all its
// neighbours are coloured, and only final medium edges count towards the
// pruning bound.
struct SearchOptions {
  // Each edge may use at most one colour beyond the largest used so far,
  // which fixes the colours at vertex 0 and removes colour renamings.
  bool symmetry_breaking = true;
};

struct MinMediumResult {
  int count = 0;
  EdgeColouring witness;
  long nodes = 0;
};

// Minimum number of medium edges over all proper k-edge-colourings, and
// the first optimum met in the search order. k must be in 3..6; throws
// InputError when g has no proper k-edge-colouring.
MinMediumResult min_medium_exact(const MultiGraph& g, int k,
                                 const SearchOptions& opts = {});

// A proper k-edge-colouring without medium edges, if any.
std::optional<EdgeColouring> exists_normal(const MultiGraph& g, int k,
                                           const SearchOptions& opts = {});

// Calls visit on each normal k-edge-colouring in search order until visit
// returns false or `limit` colourings have been seen. Returns the number
// visited.
long for_each_normal(const MultiGraph& g, int k, long limit,
                     const std::function<bool(const EdgeColouring&)>& visit,
                     const SearchOptions& opts = {});

struct ConjectureReport {
  bool holds = false;                   // a normal 5-edge-colouring exists
  std::optional<EdgeColouring> witness;
  std::optional<PetersenColouring> petersen;
  bool round_trip = false;              // label o g reproduces the witness
  std::optional<PetersenImageReport> image;
  // A non-surjective image must come with a 3-edge-colouring of g. The
  // image itself need not be a single star.
  bool image_consistent = false;
};

ConjectureReport verify_conjecture_on(const MultiGraph& g);

}  // namespace pcol

#endif  // PCOL_ORACLE_HPP_
