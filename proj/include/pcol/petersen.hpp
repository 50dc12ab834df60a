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

#ifndef PCOL_PETERSEN_HPP_
#define PCOL_PETERSEN_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/graph.hpp"

namespace pcol {

// The Petersen graph as the Kneser graph K(5,2). Vertex w stands for the
// 2-subset subset[w] of {1..5}, vertices ordered lexicographically by
// subset; two vertices are adjacent when their subsets are disjoint. The
// label of an edge is the one element of {1..5} missing from both ends.
struct KneserPetersen {
  MultiGraph graph;
  std::vector<std::array<int, 2>> subset;
  std::vector<int> label;  // per edge id

  VertexId vertex_of(int a, int b) const;
  EdgeId edge_between(VertexId u, VertexId w) const;
  // The edge at w carrying `label`; exactly one exists when label is not
  // in subset[w].
  EdgeId edge_with_label(VertexId w, int label) const;
};

KneserPetersen build_kneser_petersen();
const KneserPetersen& kneser_petersen();

// Maps every edge of G to an edge of the Petersen graph so that adjacent
// edges go to distinct adjacent edges.
struct PetersenColouring {
  std::vector<EdgeId> image;
};

// First adjacency violation, or nullopt when pc is a Petersen colouring.
std::optional<std::string> check_petersen_colouring(const MultiGraph& g,
                                                    const PetersenColouring& pc);

// f must be a proper colouring with colours in 1..5 and no medium edge;
// throws InputError otherwise. The edge uv goes to the Petersen edge with
// label f(uv) at the vertex whose subset holds the other two colours at u.
PetersenColouring normal_to_petersen(const MultiGraph& g, const EdgeColouring& f);

// f = label o pc. Throws InputError when pc is not a Petersen colouring.
EdgeColouring petersen_to_normal(const MultiGraph& g, const PetersenColouring& pc);

// Colour i in a 3-edge-colouring goes to the edge labelled i at {4,5}.
PetersenColouring trivial_petersen_colouring(const MultiGraph& g,
                                             const EdgeColouring& three_colouring);

enum class PetersenImage { kTrivial, kSurjective, kNeither };

const char* to_string(PetersenImage k);

struct PetersenImageReport {
  PetersenImage kind = PetersenImage::kNeither;
  std::vector<EdgeId> image;  // distinct Petersen edges hit, sorted
};

// Trivial when every image edge touches one common Petersen vertex,
// surjective when all 15 edges are hit. `image` is the witness either way.
PetersenImageReport classify_petersen_colouring(const PetersenColouring& pc);

// Length of a shortest cycle; 2 for parallel edges, 0 when acyclic.
int girth(const MultiGraph& g);

// Vertex map h_of[v] of an isomorphism g -> h between simple graphs, found
// by backtracking. nullopt when none exists.
std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g,
                                                      const MultiGraph& h);

bool is_petersen_graph(const MultiGraph& g);

}  // namespace pcol

#endif  // PCOL_PETERSEN_HPP_
