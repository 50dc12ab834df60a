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

#include "pcol/construction.hpp"

#include <algorithm>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

namespace {

void require_selection(const MultiGraph& g, const TwoFactor& tf,
                       const EdgeSelection& s) {
  if (auto bad = check_selection(g, tf, s)) {
    throw InputError("invalid edge-selection: " + *bad);
  }
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// Index i such that tf.edge_at(c, i) == e.
int cycle_index_of(const TwoFactor& tf, int c, EdgeId e) {
  const auto& edges = tf.cycle_edges[c];
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw InvariantError("edge is not on the expected cycle");
  return static_cast<int>(it - edges.begin());
}

// The colour of the cycle edge at v other than the colour-3 edge.
int flank_colour(const TwoFactor& tf, const std::vector<int>& colour,
                 EdgeId three_edge, VertexId v) {
  const int c = tf.cycle_of_vertex[v];
  const int p = tf.position[v];
  EdgeId before = tf.edge_at(c, p - 1), after = tf.edge_at(c, p);
  return colour[before == three_edge ? after : before];
}

}  // namespace

std::vector<EdgeId> place_colour_3(const MultiGraph& g, const TwoFactor& tf,
                                   const EdgeSelection& s) {
  require_selection(g, tf, s);
  std::vector<std::vector<VertexId>> attached(tf.cycle_count());
  for (EdgeId e : s.selected) {
    const Edge& ed = g.edge(e);
    attached[tf.cycle_of_vertex[ed.u]].push_back(ed.u);
    attached[tf.cycle_of_vertex[ed.v]].push_back(ed.v);
  }
  std::vector<EdgeId> out(tf.cycle_count(), -1);
  for (int c = 0; c < tf.cycle_count(); ++c) {
    if (!tf.is_odd(c)) continue;
    const auto& at = attached[c];
    if (at.empty()) {
      out[c] = tf.edge_at(c, 0);
    } else if (at.size() == 1) {
      out[c] = tf.edge_at(c, tf.position[at[0]]);
    } else {
      const int p = tf.position[at[0]], q = tf.position[at[1]];
      out[c] = mod(q - p, tf.length(c)) == 1 ? tf.edge_at(c, p) : tf.edge_at(c, q);
    }
  }
  return out;
}

PathColouring solve_path_phases(const MultiGraph& g, const TwoFactor& tf,
                                const EdgeSelection& s,
                                const std::vector<EdgeId>& three_edges) {
  require_selection(g, tf, s);
  const int k = tf.cycle_count();
  PathColouring out;
  out.colour.assign(g.edge_count(), 0);
  out.phase.assign(k, 1);

  std::vector<int> start(k, -1);  // colour-3 edge joins positions start, start+1
  for (int c = 0; c < k; ++c) {
    if (tf.is_odd(c)) {
      if (three_edges.at(c) < 0) throw InputError("odd cycle without a colour-3 edge");
      start[c] = cycle_index_of(tf, c, three_edges[c]);
    }
  }

  // Flank colour at v is phase when v follows the colour-3 edge and the
  // other colour when v precedes it; `offset` is 1 in the latter case.
  auto offset = [&](VertexId v) {
    const int c = tf.cycle_of_vertex[v];
    const int p = tf.position[v];
    if (p == start[c]) return 1;
    if (p == mod(start[c] + 1, tf.length(c))) return 0;
    throw InvariantError("selected edge does not touch the colour-3 edge");
  };

  std::vector<int> bit(k, 0);
  for (const SComponent& comp : s_components(g, tf, s)) {
    std::vector<EdgeId> constraints = comp.associated_edges;
    if (comp.is_odd_cycle()) constraints.erase(constraints.begin());
    std::vector<char> fixed(k, 0);
    fixed[comp.cycles.front()] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      for (EdgeId e : constraints) {
        const Edge& ed = g.edge(e);
        const int a = tf.cycle_of_vertex[ed.u], b = tf.cycle_of_vertex[ed.v];
        const int rel = offset(ed.u) ^ offset(ed.v);
        if (fixed[a] && !fixed[b]) {
          bit[b] = bit[a] ^ rel;
          fixed[b] = 1;
          progress = true;
        } else if (fixed[b] && !fixed[a]) {
          bit[a] = bit[b] ^ rel;
          fixed[a] = 1;
          progress = true;
        }
      }
    }
    for (EdgeId e : constraints) {
      const Edge& ed = g.edge(e);
      const int a = tf.cycle_of_vertex[ed.u], b = tf.cycle_of_vertex[ed.v];
      if ((bit[a] ^ bit[b]) != (offset(ed.u) ^ offset(ed.v))) {
        throw InvariantError("phase constraints infeasible on a " +
                             std::string(to_string(comp.shape)) + " component");
      }
    }
  }

  for (int c = 0; c < k; ++c) {
    const int len = tf.length(c);
    if (!tf.is_odd(c)) {
      for (int i = 0; i < len; ++i) out.colour[tf.edge_at(c, i)] = i % 2 == 0 ? 1 : 2;
      continue;
    }
    const int p = bit[c] ? 2 : 1;
    out.phase[c] = p;
    for (int j = 0; j < len - 1; ++j) {
      out.colour[tf.edge_at(c, start[c] + 1 + j)] = j % 2 == 0 ? p : 3 - p;
    }
  }

  for (EdgeId e : s.selected) {
    const Edge& ed = g.edge(e);
    const int cu = tf.cycle_of_vertex[ed.u], cv = tf.cycle_of_vertex[ed.v];
    if (flank_colour(tf, out.colour, three_edges[cu], ed.u) !=
        flank_colour(tf, out.colour, three_edges[cv], ed.v)) {
      out.medium_selected.push_back(e);
    }
  }
  for (const SComponent& comp : s_components(g, tf, s)) {
    int mediums = 0;
    for (EdgeId e : comp.associated_edges) {
      mediums += std::binary_search(out.medium_selected.begin(),
                                    out.medium_selected.end(), e) ? 1 : 0;
    }
    if (mediums != (comp.is_odd_cycle() ? 1 : 0)) {
      throw InvariantError("unexpected number of medium selected edges on a " +
                           std::string(to_string(comp.shape)) + " component");
    }
  }
  return out;
}

Construction construct_colouring(const MultiGraph& g, const TwoFactor& tf,
                                 const EdgeSelection& s) {
  if (!g.is_simple()) throw InputError("construction needs a simple graph");
  Construction out;
  out.colour3_edge = place_colour_3(g, tf, s);
  PathColouring paths = solve_path_phases(g, tf, s, out.colour3_edge);
  out.phase = paths.phase;
  out.medium_selected = paths.medium_selected;

  out.colouring.palette = 4;
  out.colouring.colour = paths.colour;
  for (EdgeId e : tf.matching) out.colouring[e] = 4;
  for (EdgeId e : out.colour3_edge) {
    if (e >= 0) out.colouring[e] = 3;
  }
  if (!is_proper(g, out.colouring)) {
    throw InvariantError("constructed colouring is not proper");
  }
  return out;
}

std::vector<std::string> audit_bullets(const MultiGraph& g, const TwoFactor& tf,
                                       const EdgeSelection& s,
                                       const EdgeColouring& c) {
  std::vector<std::string> fails;
  if (c.palette != 4 || !is_proper(g, c)) {
    fails.push_back("colouring is not a proper 4-edge-colouring");
    return fails;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if ((c[e] == 4) != static_cast<bool>(tf.in_matching[e])) {
      fails.push_back("edge " + std::to_string(e) +
                      ": colour 4 does not coincide with the matching");
    }
    if (c[e] == 3) {
      const int cyc = tf.cycle_of_edge[e];
      if (cyc < 0 || !tf.is_odd(cyc)) {
        fails.push_back("edge " + std::to_string(e) +
                        " has colour 3 outside an odd cycle");
      }
    }
  }
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    if (!tf.is_odd(cyc)) continue;
    int threes = 0;
    for (EdgeId e : tf.cycle_edges[cyc]) threes += c[e] == 3 ? 1 : 0;
    if (threes != 1) {
      fails.push_back("odd cycle " + std::to_string(cyc) + " has " +
                      std::to_string(threes) + " edges of colour 3");
    }
  }
  for (EdgeId e : s.selected) {
    int threes = 0;
    for (EdgeId f : adjacent_edges(g, e)) threes += c[f] == 3 ? 1 : 0;
    if (threes != 2) {
      fails.push_back("selected edge " + std::to_string(e) + " is adjacent to " +
                      std::to_string(threes) + " edges of colour 3");
    }
  }
  const auto classes = classify_all(g, c);
  for (const SComponent& comp : s_components(g, tf, s)) {
    int mediums = 0;
    for (EdgeId e : comp.associated_edges) {
      mediums += classes[e] == EdgeClass::kMedium ? 1 : 0;
    }
    if (mediums > 0 && !comp.is_odd_cycle()) {
      fails.push_back("medium selected edge on a " +
                      std::string(to_string(comp.shape)) + " component");
    }
    if (mediums > 1) {
      fails.push_back("component with " + std::to_string(mediums) +
                      " medium selected edges");
    }
  }
  return fails;
}

std::vector<int> medium_edges_per_cycle(const MultiGraph& g, const TwoFactor& tf,
                                        const EdgeColouring& c) {
  const auto classes = classify_all(g, c);
  std::vector<int> out(tf.cycle_count(), 0);
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    for (EdgeId e : tf.cycle_edges[cyc]) {
      out[cyc] += classes[e] == EdgeClass::kMedium ? 1 : 0;
    }
  }
  return out;
}

std::vector<std::string> audit_cycle_mediums(const MultiGraph& g,
                                             const TwoFactor& tf,
                                             const EdgeColouring& c) {
  std::vector<std::string> fails;
  const auto counts = medium_edges_per_cycle(g, tf, c);
  for (int cyc = 0; cyc < tf.cycle_count(); ++cyc) {
    const int expected = tf.is_odd(cyc) ? 3 : 0;
    if (counts[cyc] != expected) {
      fails.push_back("cycle " + std::to_string(cyc) + " (length " +
                      std::to_string(tf.length(cyc)) + ") has " +
                      std::to_string(counts[cyc]) + " medium edges, expected " +
                      std::to_string(expected));
    }
  }
  return fails;
}

}  // namespace pcol
