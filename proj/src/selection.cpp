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

#include "pcol/selection.hpp"

#include <algorithm>
#include <numeric>

#include "pcol/error.hpp"

namespace pcol {

int EdgeSelection::degree2_count() const {
  return static_cast<int>(
      std::count(degree_of_cycle.begin(), degree_of_cycle.end(), 2));
}

bool EdgeSelection::contains(EdgeId e) const {
  return std::binary_search(selected.begin(), selected.end(), e);
}

const char* to_string(ComponentShape s) {
  switch (s) {
    case ComponentShape::kSingleton: return "singleton";
    case ComponentShape::kPath: return "path";
    case ComponentShape::kCycle: return "cycle";
    case ComponentShape::kDoubleEdge: return "double_edge";
  }
  return "?";
}

std::vector<EdgeId> eligible_edges(const MultiGraph& g, const TwoFactor& tf) {
  std::vector<EdgeId> out;
  for (EdgeId e : tf.matching) {
    const Edge& ed = g.edge(e);
    const int a = tf.cycle_of_vertex[ed.u], b = tf.cycle_of_vertex[ed.v];
    if (a != b && tf.is_odd(a) && tf.is_odd(b)) out.push_back(e);
  }
  return out;
}

namespace {

// The endpoint of e on cycle c, or -1 if e has zero or two endpoints there.
VertexId attachment(const MultiGraph& g, const TwoFactor& tf, EdgeId e, int c) {
  const Edge& ed = g.edge(e);
  const bool on_u = tf.cycle_of_vertex[ed.u] == c;
  const bool on_v = tf.cycle_of_vertex[ed.v] == c;
  if (on_u == on_v) return -1;
  return on_u ? ed.u : ed.v;
}

bool positions_adjacent(const TwoFactor& tf, VertexId a, VertexId b, int c) {
  const int len = tf.length(c);
  const int d = ((tf.position[a] - tf.position[b]) % len + len) % len;
  return d == 1 || d == len - 1;
}

}  // namespace

bool consecutive(const MultiGraph& g, const TwoFactor& tf, EdgeId e1,
                 EdgeId e2, int c) {
  if (e1 == e2) throw InputError("consecutive: the two edges coincide");
  if (c < 0 || c >= tf.cycle_count()) throw InputError("consecutive: bad cycle");
  const VertexId a = attachment(g, tf, e1, c);
  const VertexId b = attachment(g, tf, e2, c);
  if (a < 0 || b < 0) {
    throw InputError("consecutive: edge does not have exactly one end on the cycle");
  }
  return positions_adjacent(tf, a, b, c);
}

EdgeSelection make_selection(const MultiGraph& g, const TwoFactor& tf,
                             std::vector<EdgeId> edges) {
  EdgeSelection s;
  std::sort(edges.begin(), edges.end());
  s.selected = std::move(edges);
  s.degree_of_cycle.assign(tf.cycle_count(), 0);
  for (EdgeId e : s.selected) {
    const Edge& ed = g.edge(e);
    ++s.degree_of_cycle[tf.cycle_of_vertex[ed.u]];
    if (tf.cycle_of_vertex[ed.v] != tf.cycle_of_vertex[ed.u]) {
      ++s.degree_of_cycle[tf.cycle_of_vertex[ed.v]];
    }
  }
  return s;
}

std::optional<std::string> check_selection(const MultiGraph& g,
                                           const TwoFactor& tf,
                                           const EdgeSelection& s) {
  std::vector<std::vector<VertexId>> attached(tf.cycle_count());
  for (size_t i = 0; i < s.selected.size(); ++i) {
    const EdgeId e = s.selected[i];
    if (e < 0 || e >= g.edge_count() || !tf.in_matching[e]) {
      return "edge " + std::to_string(e) + " is not a matching edge";
    }
    if (i > 0 && s.selected[i - 1] >= e) return std::string("selection not sorted");
    const Edge& ed = g.edge(e);
    const int a = tf.cycle_of_vertex[ed.u], b = tf.cycle_of_vertex[ed.v];
    if (a == b || !tf.is_odd(a) || !tf.is_odd(b)) {
      return "edge " + std::to_string(e) + " does not join two different odd cycles";
    }
    attached[a].push_back(ed.u);
    attached[b].push_back(ed.v);
  }
  for (int c = 0; c < tf.cycle_count(); ++c) {
    const int deg = static_cast<int>(attached[c].size());
    if (deg > 2) return "cycle " + std::to_string(c) + " meets more than two selected edges";
    if (deg == 2 && !positions_adjacent(tf, attached[c][0], attached[c][1], c)) {
      return "selected edges at cycle " + std::to_string(c) + " are not consecutive";
    }
    if (c < static_cast<int>(s.degree_of_cycle.size()) && s.degree_of_cycle[c] != deg) {
      return "recorded degree of cycle " + std::to_string(c) + " is wrong";
    }
  }
  return std::nullopt;
}

namespace {

class SelectionSearch {
 public:
  SelectionSearch(const MultiGraph& g, const TwoFactor& tf)
      : g_(g), tf_(tf), candidates_(eligible_edges(g, tf)),
        attached_(tf.cycle_count()) {}

  std::vector<EdgeId> run() {
    search(0);
    return best_;
  }

 private:
  bool fits(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    for (VertexId v : {ed.u, ed.v}) {
      const int c = tf_.cycle_of_vertex[v];
      const auto& at = attached_[c];
      if (at.size() >= 2) return false;
      if (at.size() == 1 && !positions_adjacent(tf_, at[0], v, c)) return false;
    }
    return true;
  }

  void search(size_t idx) {
    const int size = static_cast<int>(current_.size());
    int addable = 0;
    for (size_t i = idx; i < candidates_.size(); ++i) addable += fits(candidates_[i]) ? 1 : 0;
    // Anything reached later is lexicographically larger, so ties prune.
    if (best_size_ >= 0) {
      if (size + addable < best_size_) return;
      if (size + addable == best_size_ &&
          degree2_ + 2 * (best_size_ - size) <= best_degree2_) {
        return;
      }
    }
    if (idx == candidates_.size()) {
      if (size > best_size_ || (size == best_size_ && degree2_ > best_degree2_)) {
        best_size_ = size;
        best_degree2_ = degree2_;
        best_ = current_;
      }
      return;
    }
    const EdgeId e = candidates_[idx];
    if (fits(e)) {
      const Edge& ed = g_.edge(e);
      for (VertexId v : {ed.u, ed.v}) {
        auto& at = attached_[tf_.cycle_of_vertex[v]];
        at.push_back(v);
        if (at.size() == 2) ++degree2_;
      }
      current_.push_back(e);
      search(idx + 1);
      current_.pop_back();
      for (VertexId v : {ed.u, ed.v}) {
        auto& at = attached_[tf_.cycle_of_vertex[v]];
        if (at.size() == 2) --degree2_;
        at.pop_back();
      }
    }
    search(idx + 1);
  }

  const MultiGraph& g_;
  const TwoFactor& tf_;
  std::vector<EdgeId> candidates_;
  std::vector<std::vector<VertexId>> attached_;
  std::vector<EdgeId> current_;
  int degree2_ = 0;

  std::vector<EdgeId> best_;
  int best_size_ = -1;
  int best_degree2_ = -1;
};

}  // namespace

EdgeSelection find_optimal_selection(const MultiGraph& g, const TwoFactor& tf) {
  EdgeSelection s = make_selection(g, tf, SelectionSearch(g, tf).run());
  if (auto bad = check_selection(g, tf, s)) {
    throw InvariantError("optimal selection search produced an invalid set: " + *bad);
  }
  return s;
}

std::vector<SComponent> s_components(const MultiGraph& g, const TwoFactor& tf,
                                     const EdgeSelection& s) {
  const int k = tf.cycle_count();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : s.selected) {
    const Edge& ed = g.edge(e);
    int a = find(tf.cycle_of_vertex[ed.u]), b = find(tf.cycle_of_vertex[ed.v]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> index_of_root(k, -1);
  std::vector<SComponent> out;
  for (int c = 0; c < k; ++c) {
    const int root = find(c);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index_of_root[root]].cycles.push_back(c);
  }
  for (EdgeId e : s.selected) {
    const int root = find(tf.cycle_of_vertex[g.edge(e).u]);
    out[index_of_root[root]].associated_edges.push_back(e);
  }
  for (SComponent& comp : out) {
    const size_t cycles = comp.cycles.size();
    const size_t edges = comp.associated_edges.size();
    if (cycles == 1) {
      comp.shape = ComponentShape::kSingleton;
    } else if (edges + 1 == cycles) {
      comp.shape = ComponentShape::kPath;
    } else if (cycles == 2 && edges == 2) {
      comp.shape = ComponentShape::kDoubleEdge;
    } else if (edges == cycles) {
      comp.shape = ComponentShape::kCycle;
    } else {
      throw InvariantError("S-component with an impossible shape");
    }
  }
  return out;
}

}  // namespace pcol
