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

// Fixture graphs and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's own search code.

#ifndef PCOL_TESTS_SUPPORT_HPP_
#define PCOL_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/corpus.hpp"
#include "pcol/factorization.hpp"
#include "pcol/graph.hpp"
#include "pcol/io.hpp"

namespace pcol::testing {

inline MultiGraph petersen() { return parse_graph6("IheA@GUAo"); }
inline MultiGraph k4() { return parse_graph6("C~"); }
inline MultiGraph k33() { return parse_graph6("EFz_"); }
inline MultiGraph prism3() { return parse_graph6("E{Sw"); }
inline MultiGraph prism5() { return parse_graph6("IheAHCPBG"); }
inline MultiGraph theta() { return build_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

// Double edges 0-1 and 2-3, plus 0-2 and 1-3.
inline MultiGraph necklace4() {
  return build_graph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
}

// Two copies of K4 with one edge subdivided, joined at the subdivision
// vertices by the bridge 4-9 (edge id 14).
inline MultiGraph bridged_pair() {
  return build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                          {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                          {4, 9}});
}

// Two 5-cycles 0..4 and 5..9 joined by 0-5 and 1-6 (consecutive on both)
// and by 2-8, 3-7, 4-9.
inline MultiGraph two_pentagons_double() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                          {0, 5}, {1, 6}, {2, 8}, {3, 7}, {4, 9}});
}

// g with edge e replaced by a path a-x-y-b whose middle edge is doubled.
inline MultiGraph insert_digon(const MultiGraph& g, EdgeId e) {
  std::vector<std::pair<int, int>> edges;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f != e) edges.emplace_back(g.edge(f).u, g.edge(f).v);
  }
  const int x = g.vertex_count(), y = x + 1;
  edges.insert(edges.end(), {{g.edge(e).u, x}, {x, y}, {x, y}, {y, g.edge(e).v}});
  return build_graph(x + 2, edges);
}

// Colours of the edges other than e touching an endpoint of e, found by
// scanning the whole edge list.
inline std::set<int> neighbourhood_colours(const MultiGraph& g, const std::vector<int>& c,
                                           EdgeId e) {
  std::set<int> out;
  const Edge& a = g.edge(e);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f != e && (g.edge(f).touches(a.u) || g.edge(f).touches(a.v))) out.insert(c[f]);
  }
  return out;
}

inline bool brute_proper(const MultiGraph& g, const std::vector<int>& c) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (c[e] == c[f] && (a.touches(b.u) || a.touches(b.v))) return false;
    }
  }
  return true;
}

inline int brute_medium(const MultiGraph& g, const std::vector<int>& c) {
  int out = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out += neighbourhood_colours(g, c, e).size() == 3 ? 1 : 0;
  }
  return out;
}

// Every proper colouring with colours 1..k, by odometer over k^m.
inline void for_each_proper(const MultiGraph& g, int k,
                            const std::function<void(const std::vector<int>&)>& visit) {
  const int m = g.edge_count();
  std::vector<int> c(m, 1);
  while (true) {
    if (brute_proper(g, c)) visit(c);
    int i = 0;
    while (i < m && c[i] == k) c[i++] = 1;
    if (i == m) return;
    ++c[i];
  }
}

// Perfect matchings as sorted id sets, from all n/2-subsets of edges.
inline std::vector<std::vector<EdgeId>> brute_matchings(const MultiGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  const int m = g.edge_count(), half = g.vertex_count() / 2;
  std::vector<EdgeId> pick;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(pick.size()) == half) {
      std::vector<int> deg(g.vertex_count(), 0);
      for (EdgeId e : pick) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
      }
      if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) out.push_back(pick);
      return;
    }
    for (int e = from; e < m; ++e) {
      pick.push_back(e);
      go(e + 1);
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

// Connectivity after deleting edge `skip`, by repeated relaxation.
inline bool connected_without(const MultiGraph& g, EdgeId skip) {
  std::vector<char> reach(g.vertex_count(), 0);
  reach[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (e == skip) continue;
      const Edge& ed = g.edge(e);
      if (reach[ed.u] != reach[ed.v]) {
        reach[ed.u] = reach[ed.v] = 1;
        grew = true;
      }
    }
  }
  return std::all_of(reach.begin(), reach.end(), [](char r) { return r != 0; });
}

// The three selection properties, checked from first principles.
inline bool brute_is_selection(const MultiGraph& g, const TwoFactor& tf,
                               const std::vector<EdgeId>& s) {
  std::vector<std::vector<VertexId>> at(tf.cycle_count());
  for (EdgeId e : s) {
    if (!tf.in_matching[e]) return false;
    const int a = tf.cycle_of_vertex[g.edge(e).u], b = tf.cycle_of_vertex[g.edge(e).v];
    if (a == b || !tf.is_odd(a) || !tf.is_odd(b)) return false;
    at[a].push_back(g.edge(e).u);
    at[b].push_back(g.edge(e).v);
  }
  for (int c = 0; c < tf.cycle_count(); ++c) {
    if (at[c].size() > 2) return false;
    if (at[c].size() == 2) {
      const int len = tf.length(c);
      const int d = (tf.position[at[c][0]] - tf.position[at[c][1]] + len) % len;
      if (d != 1 && d != len - 1) return false;
    }
  }
  return true;
}

// Every 2-factor of g, one per perfect matching.
inline std::vector<TwoFactor> all_two_factors(const MultiGraph& g) {
  std::vector<TwoFactor> out;
  for (const auto& m : brute_matchings(g)) out.push_back(two_factor_from_matching(g, m));
  return out;
}

// Calls visit on every (graph, 2-factor) pair with at least one odd cycle,
// over the connected bridgeless simple cubic graphs on up to max_n
// vertices, triangle-free ones only when asked.
inline void for_each_instance(int max_n, bool triangle_free,
                              const std::function<void(const MultiGraph&, const TwoFactor&)>& visit) {
  for (int n = 4; n <= max_n; n += 2) {
    for (const MultiGraph& g : bridgeless_cubic_graphs(n)) {
      bool triangle = false;
      for (const Edge& e : g.edges()) {
        for (VertexId w = 0; w < n; ++w) {
          if (w != e.u && w != e.v && g.multiplicity(w, e.u) && g.multiplicity(w, e.v)) triangle = true;
        }
      }
      if (triangle_free && triangle) continue;
      for (const TwoFactor& tf : all_two_factors(g)) {
        if (tf.odd_cycle_count() > 0) visit(g, tf);
      }
    }
  }
}

}  // namespace pcol::testing

#endif  // PCOL_TESTS_SUPPORT_HPP_
