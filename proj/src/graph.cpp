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

#include "pcol/graph.hpp"

#include <algorithm>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

MultiGraph::MultiGraph(int vertex_count,
                       std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  incidence_.resize(vertex_count);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range");
    }
    if (u == v) {
      throw InputError("loop at vertex " + std::to_string(u));
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
  }
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident(u)) {
    if (edges_[e].other(u) == v) ++count;
  }
  return count;
}

bool MultiGraph::is_simple() const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    std::vector<VertexId> nbrs;
    for (EdgeId e : incident(v)) nbrs.push_back(edges_[e].other(v));
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
  }
  return true;
}

bool MultiGraph::is_cubic() const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [](const auto& inc) { return inc.size() == 3; });
}

MultiGraph build_graph(int vertex_count,
                       const std::vector<std::pair<int, int>>& edge_list) {
  return MultiGraph(vertex_count, edge_list);
}

std::vector<EdgeId> adjacent_edges(const MultiGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) {
    throw InputError("invalid edge id " + std::to_string(e));
  }
  const Edge& ed = g.edge(e);
  std::vector<EdgeId> out;
  for (VertexId w : {ed.u, ed.v}) {
    for (EdgeId f : g.incident(w)) {
      if (f != e) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<EdgeId> find_bridges(const MultiGraph& g) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  const int n = g.vertex_count();
  std::vector<EdgeId> bridges;
  if (n == 0) return bridges;

  // Iterative lowpoint DFS. The tree edge is skipped by id, not by parent
  // vertex, so a parallel copy correctly counts as a back edge.
  std::vector<int> order(n, -1), low(n, 0);
  struct Frame {
    VertexId v;
    EdgeId via;
    size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  order[0] = low[0] = clock++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto inc = g.incident(top.v);
    if (top.next < inc.size()) {
      EdgeId e = inc[top.next++];
      if (e == top.via) continue;
      VertexId w = g.edge(e).other(top.v);
      if (order[w] < 0) {
        order[w] = low[w] = clock++;
        stack.push_back({w, e, 0});
      } else {
        low[top.v] = std::min(low[top.v], order[w]);
      }
      continue;
    }
    Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > order[parent]) bridges.push_back(done.via);
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

Diagnosis validate_input(const MultiGraph& g) {
  if (g.vertex_count() == 0) {
    return {Violation::kEmpty, "graph has no vertices"};
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      return {Violation::kNotCubic, "vertex " + std::to_string(v) +
                                        " has degree " +
                                        std::to_string(g.degree(v))};
    }
  }
  if (!is_connected(g)) {
    return {Violation::kDisconnected, "graph is disconnected"};
  }
  auto bridges = find_bridges(g);
  if (!bridges.empty()) {
    const Edge& b = g.edge(bridges.front());
    return {Violation::kBridge, "edge " + std::to_string(bridges.front()) +
                                    " (" + std::to_string(b.u) + "," +
                                    std::to_string(b.v) + ") is a bridge"};
  }
  return {};
}

void require_valid_input(const MultiGraph& g) {
  Diagnosis d = validate_input(g);
  if (!d.ok()) {
    throw InputError(std::string(to_string(d.violation)) + ": " + d.message);
  }
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "ok";
    case Violation::kEmpty: return "empty";
    case Violation::kNotCubic: return "not cubic";
    case Violation::kDisconnected: return "disconnected";
    case Violation::kBridge: return "bridge";
  }
  return "?";
}

}  // namespace pcol
