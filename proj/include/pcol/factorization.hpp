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

#ifndef PCOL_FACTORIZATION_HPP_
#define PCOL_FACTORIZATION_HPP_

#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

// Sorted edge ids of a perfect matching.
using Matching = std::vector<EdgeId>;

// A perfect matching M together with the cycle decomposition of G - M.
//
// Cycle c visits cycles[c][0], cycles[c][1], ... in its fixed cyclic order;
// cycle_edges[c][i] joins positions i and i+1 (mod length). The traversal
// starts at the smallest vertex of the cycle and heads to its smaller
// neighbour on the cycle (smaller edge id for a 2-cycle).
struct TwoFactor {
  Matching matching;
  std::vector<std::vector<VertexId>> cycles;
  std::vector<std::vector<EdgeId>> cycle_edges;

  std::vector<int> cycle_of_vertex;
  std::vector<int> position;           // index of v inside its cycle
  std::vector<VertexId> partner;       // v' with vv' in M
  std::vector<EdgeId> matching_edge;   // the M-edge at v
  std::vector<int> cycle_of_edge;      // -1 for M-edges
  std::vector<char> in_matching;       // per edge id

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int length(int c) const { return static_cast<int>(cycles[c].size()); }
  bool is_odd(int c) const { return length(c) % 2 == 1; }
  int odd_cycle_count() const;

  // Vertex at position p (mod length) of cycle c.
  VertexId at(int c, int p) const;
  // Cycle edge between positions p and p+1 (mod length) of cycle c.
  EdgeId edge_at(int c, int p) const;

  // True when the M-edge e has both endpoints on one cycle.
  bool is_chord(const MultiGraph& g, EdgeId e) const;
};

// Distinct perfect matchings in lexicographic order of their sorted id
// sets. Exhaustive whenever there are at most `limit` of them; otherwise
// the first `limit` found by the backtracking search, sorted.
std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g,
                                                  int limit);

TwoFactor two_factor_from_matching(const MultiGraph& g, const Matching& m);

inline constexpr int kDefaultMatchingCap = 10000;

// First enumerated 2-factor having a cycle whose length is not 5, or the
// first 2-factor if none does.
TwoFactor choose_two_factor(const MultiGraph& g,
                            int matching_cap = kDefaultMatchingCap);

}  // namespace pcol

#endif  // PCOL_FACTORIZATION_HPP_
