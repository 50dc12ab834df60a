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

#ifndef PCOL_COLOURING_HPP_
#define PCOL_COLOURING_HPP_

#include <optional>
#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

// A total map edge id -> colour in 1..palette.
struct EdgeColouring {
  int palette = 4;
  std::vector<int> colour;

  int operator[](EdgeId e) const { return colour[e]; }
  int& operator[](EdgeId e) { return colour[e]; }
  int size() const { return static_cast<int>(colour.size()); }
};

// Poor: the adjacent edges carry 2 colours. Rich: 4. Medium: anything else.
enum class EdgeClass { kPoor, kMedium, kRich };

const char* to_string(EdgeClass c);

struct ClassCounts {
  int poor = 0;
  int medium = 0;
  int rich = 0;

  int total() const { return poor + medium + rich; }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// Every edge coloured from the palette, adjacent edges distinct.
bool is_proper(const MultiGraph& g, const EdgeColouring& c);
void require_proper(const MultiGraph& g, const EdgeColouring& c);

// Classification from the number of distinct colours on adjacent_edges(e).
// The checked entry points throw InputError on an improper colouring.
EdgeClass classify_edge(const MultiGraph& g, const EdgeColouring& c, EdgeId e);
std::vector<EdgeClass> classify_all(const MultiGraph& g,
                                    const EdgeColouring& c);
ClassCounts count_classes(const MultiGraph& g, const EdgeColouring& c);
int medium_count(const MultiGraph& g, const EdgeColouring& c);

// Same as classify_edge without the properness check; colour 0 on a
// neighbour is treated as an ordinary value. Used by the searches.
EdgeClass classify_unchecked(const MultiGraph& g, std::span<const int> colour,
                             EdgeId e);

// Exact backtracking; fixes the colours around vertex 0.
std::optional<EdgeColouring> try_3_edge_colouring(const MultiGraph& g);

}  // namespace pcol

#endif  // PCOL_COLOURING_HPP_
