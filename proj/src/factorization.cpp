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

#include "pcol/factorization.hpp"

#include <algorithm>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

int TwoFactor::odd_cycle_count() const {
  int odd = 0;
  for (int c = 0; c < cycle_count(); ++c) odd += is_odd(c) ? 1 : 0;
  return odd;
}

VertexId TwoFactor::at(int c, int p) const {
  const int len = length(c);
  return cycles[c][((p % len) + len) % len];
}

EdgeId TwoFactor::edge_at(int c, int p) const {
  const int len = length(c);
  return cycle_edges[c][((p % len) + len) % len];
}

bool TwoFactor::is_chord(const MultiGraph& g, EdgeId e) const {
  if (!in_matching[e]) return false;
  const Edge& ed = g.edge(e);
  return cycle_of_vertex[ed.u] == cycle_of_vertex[ed.v];
}

namespace {

void extend_matching(const MultiGraph& g, std::vector<char>& covered,
                     Matching& current, int limit,
                     std::vector<Matching>& out) {
  if (static_cast<int>(out.size()) >= limit) return;
  VertexId v = 0;
  while (v < g.vertex_count() && covered[v]) ++v;
  if (v == g.vertex_count()) {
    Matching m = current;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  covered[v] = 1;
  for (EdgeId e : g.incident(v)) {
    VertexId w = g.edge(e).other(v);
    if (covered[w]) continue;
    covered[w] = 1;
    current.push_back(e);
    extend_matching(g, covered, current, limit, out);
    current.pop_back();
    covered[w] = 0;
    if (static_cast<int>(out.size()) >= limit) break;
  }
  covered[v] = 0;
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g,
                                                  int limit) {
  if (limit <= 0) throw InputError("matching limit must be positive");
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> covered(g.vertex_count(), 0);
  Matching current;
  extend_matching(g, covered, current, limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

TwoFactor two_factor_from_matching(const MultiGraph& g, const Matching& m) {
  const int n = g.vertex_count();
  if (!g.is_cubic()) throw InputError("two-factor requires a cubic graph");

  TwoFactor tf;
  tf.matching = m;
  std::sort(tf.matching.begin(), tf.matching.end());
  tf.in_matching.assign(g.edge_count(), 0);
  tf.partner.assign(n, -1);
  tf.matching_edge.assign(n, -1);
  for (EdgeId e : tf.matching) {
    if (e < 0 || e >= g.edge_count() || tf.in_matching[e]) {
      throw InputError("not a perfect matching: bad or repeated edge id");
    }
    tf.in_matching[e] = 1;
    const Edge& ed = g.edge(e);
    for (VertexId w : {ed.u, ed.v}) {
      if (tf.matching_edge[w] >= 0) {
        throw InputError("not a perfect matching: vertex " +
                         std::to_string(w) + " covered twice");
      }
      tf.matching_edge[w] = e;
      tf.partner[w] = ed.other(w);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (tf.matching_edge[v] < 0) {
      throw InputError("not a perfect matching: vertex " + std::to_string(v) +
                       " uncovered");
    }
  }

  // Each vertex keeps exactly two non-matching edges, ascending by id.
  auto factor_edges = [&](VertexId v) {
    std::vector<EdgeId> f;
    for (EdgeId e : g.incident(v)) {
      if (!tf.in_matching[e]) f.push_back(e);
    }
    return f;
  };

  tf.cycle_of_vertex.assign(n, -1);
  tf.position.assign(n, -1);
  tf.cycle_of_edge.assign(g.edge_count(), -1);
  for (VertexId start = 0; start < n; ++start) {
    if (tf.cycle_of_vertex[start] >= 0) continue;
    const int c = tf.cycle_count();
    auto f = factor_edges(start);
    EdgeId first = f[0];
    VertexId a = g.edge(f[0]).other(start);
    VertexId b = g.edge(f[1]).other(start);
    if (b < a) first = f[1];

    std::vector<VertexId> cyc;
    std::vector<EdgeId> cyc_edges;
    VertexId v = start;
    EdgeId via = first;
    do {
      tf.cycle_of_vertex[v] = c;
      tf.position[v] = static_cast<int>(cyc.size());
      cyc.push_back(v);
      cyc_edges.push_back(via);
      tf.cycle_of_edge[via] = c;
      VertexId w = g.edge(via).other(v);
      auto fw = factor_edges(w);
      EdgeId next = fw[0] == via ? fw[1] : fw[0];
      v = w;
      via = next;
    } while (v != start);
    tf.cycles.push_back(std::move(cyc));
    tf.cycle_edges.push_back(std::move(cyc_edges));
  }
  return tf;
}

TwoFactor choose_two_factor(const MultiGraph& g, int matching_cap) {
  auto matchings = enumerate_perfect_matchings(g, matching_cap);
  if (matchings.empty()) throw InputError("graph has no perfect matching");
  for (const Matching& m : matchings) {
    TwoFactor tf = two_factor_from_matching(g, m);
    for (int c = 0; c < tf.cycle_count(); ++c) {
      if (tf.length(c) != 5) return tf;
    }
  }
  return two_factor_from_matching(g, matchings.front());
}

}  // namespace pcol
