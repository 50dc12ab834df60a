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

#ifndef PCOL_CORPUS_HPP_
#define PCOL_CORPUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

// Canonical certificate of a multigraph given as an edge list; loops
// (u == u) are allowed. Two inputs get the same certificate iff they are
// isomorphic. perm, when given, receives the canonical position of every
// vertex.
std::string canonical_certificate(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<int>* perm = nullptr);

std::string canonical_certificate(const MultiGraph& g);

// Relabels g canonically; the edges come out sorted.
MultiGraph canonical_relabel(const MultiGraph& g);

// Every connected simple cubic graph on n vertices, one per isomorphism
// class, canonically labelled and sorted by graph6 string.
//
// Built from the two cubic pseudographs on 2 vertices (the theta and the
// dumbbell) by repeatedly adding an edge between two subdivision points:
// on two distinct edges, twice on one edge, or to a new vertex carrying a
// loop. Intermediate levels that can no longer become simple are dropped.
std::vector<MultiGraph> connected_cubic_graphs(int n);

// The bridgeless members of connected_cubic_graphs(n).
std::vector<MultiGraph> bridgeless_cubic_graphs(int n);

}  // namespace pcol

#endif  // PCOL_CORPUS_HPP_
