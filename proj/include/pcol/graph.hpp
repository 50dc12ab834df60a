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

#ifndef PCOL_GRAPH_HPP_
#define PCOL_GRAPH_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcol {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return u == w || v == w; }
};

// Loopless undirected multigraph. Edge ids are dense, assigned in insertion
// order, and stable: every per-edge table in the library is indexed by them,
// so parallel edges stay distinguishable.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Throws InputError on a loop or an endpoint out of range.
  MultiGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v, ascending.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

  // Number of edges joining u and v.
  int multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const;
  bool is_cubic() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

MultiGraph build_graph(int vertex_count,
                       const std::vector<std::pair<int, int>>& edge_list);

// The edges sharing at least one endpoint with e, each once, e excluded.
// Sorted by id.
std::vector<EdgeId> adjacent_edges(const MultiGraph& g, EdgeId e);

bool is_connected(const MultiGraph& g);

// Cut edges, ascending. Throws InputError if g is disconnected.
std::vector<EdgeId> find_bridges(const MultiGraph& g);

enum class Violation { kNone, kEmpty, kNotCubic, kDisconnected, kBridge };

struct Diagnosis {
  Violation violation = Violation::kNone;
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

// Accepts connected bridgeless cubic (loopless) multigraphs. Loops can't be
// represented, so that property is enforced at construction time.
Diagnosis validate_input(const MultiGraph& g);

// Throws InputError carrying the diagnosis message.
void require_valid_input(const MultiGraph& g);

const char* to_string(Violation v);

}  // namespace pcol

#endif  // PCOL_GRAPH_HPP_
