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

#include "pcol/colouring.hpp"

#include <algorithm>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kPoor: return "poor";
    case EdgeClass::kMedium: return "medium";
    case EdgeClass::kRich: return "rich";
  }
  return "?";
}

bool is_proper(const MultiGraph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count() || c.palette < 1) return false;
  for (int col : c.colour) {
    if (col < 1 || col > c.palette) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) {
        if (c[inc[i]] == c[inc[j]]) return false;
      }
    }
  }
  return true;
}

void require_proper(const MultiGraph& g, const EdgeColouring& c) {
  if (!is_proper(g, c)) throw InputError("edge-colouring is not proper");
}

EdgeClass classify_unchecked(const MultiGraph& g, std::span<const int> colour,
                             EdgeId e) {
  // At most 4 distinct values in a cubic graph; a small bitmask suffices.
  unsigned mask = 0;
  const Edge& ed = g.edge(e);
  for (VertexId w : {ed.u, ed.v}) {
    for (EdgeId f : g.incident(w)) {
      if (f != e) mask |= 1u << colour[f];
    }
  }
  switch (__builtin_popcount(mask)) {
    case 2: return EdgeClass::kPoor;
    case 4: return EdgeClass::kRich;
    default: return EdgeClass::kMedium;
  }
}

EdgeClass classify_edge(const MultiGraph& g, const EdgeColouring& c,
                        EdgeId e) {
  require_proper(g, c);
  if (e < 0 || e >= g.edge_count()) {
    throw InputError("invalid edge id " + std::to_string(e));
  }
  return classify_unchecked(g, c.colour, e);
}

std::vector<EdgeClass> classify_all(const MultiGraph& g,
                                    const EdgeColouring& c) {
  require_proper(g, c);
  std::vector<EdgeClass> out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out[e] = classify_unchecked(g, c.colour, e);
  }
  return out;
}

ClassCounts count_classes(const MultiGraph& g, const EdgeColouring& c) {
  ClassCounts counts;
  for (EdgeClass k : classify_all(g, c)) {
    switch (k) {
      case EdgeClass::kPoor: ++counts.poor; break;
      case EdgeClass::kMedium: ++counts.medium; break;
      case EdgeClass::kRich: ++counts.rich; break;
    }
  }
  return counts;
}

int medium_count(const MultiGraph& g, const EdgeColouring& c) {
  return count_classes(g, c).medium;
}

namespace {

class ThreeColourSearch {
 public:
  explicit ThreeColourSearch(const MultiGraph& g)
      : g_(g), colour_(g.edge_count(), 0) {}

  std::optional<EdgeColouring> run() {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (g_.degree(v) > 3) return std::nullopt;
    }
    if (g_.edge_count() > 0) {
      int next = 1;
      for (EdgeId e : g_.incident(0)) colour_[e] = next++;
      remaining_ = g_.edge_count() - g_.degree(0);
    }
    if (!search()) return std::nullopt;
    return EdgeColouring{3, colour_};
  }

 private:
  unsigned used_at(VertexId v) const {
    unsigned mask = 0;
    for (EdgeId f : g_.incident(v)) mask |= 1u << colour_[f];
    return mask & 0b1110u;
  }

  bool search() {
    if (remaining_ == 0) return true;
    // Most constrained uncoloured edge first.
    EdgeId best = -1;
    unsigned best_free = 0;
    int best_count = 4;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (colour_[e] != 0) continue;
      const Edge& ed = g_.edge(e);
      unsigned free = ~(used_at(ed.u) | used_at(ed.v)) & 0b1110u;
      int count = __builtin_popcount(free);
      if (count < best_count) {
        best = e;
        best_free = free;
        best_count = count;
        if (count <= 1) break;
      }
    }
    if (best_count == 0) return false;
    for (int col = 1; col <= 3; ++col) {
      if (!(best_free & (1u << col))) continue;
      colour_[best] = col;
      --remaining_;
      if (search()) return true;
      ++remaining_;
      colour_[best] = 0;
    }
    return false;
  }

  const MultiGraph& g_;
  std::vector<int> colour_;
  int remaining_ = 0;
};

}  // namespace

std::optional<EdgeColouring> try_3_edge_colouring(const MultiGraph& g) {
  return ThreeColourSearch(g).run();
}

}  // namespace pcol
