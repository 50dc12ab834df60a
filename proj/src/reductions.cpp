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

#include "pcol/reductions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

const char* to_string(ReductionKind k) {
  return k == ReductionKind::kMultiEdge ? "multi_edge" : "triangle";
}

namespace {

EdgeId edge_between(const MultiGraph& g, VertexId a, VertexId b) {
  for (EdgeId e : g.incident(a)) {
    if (g.edge(e).other(a) == b) return e;
  }
  return -1;
}

// Builds record.reduced from record.original, dropping `removed` vertices
// and edges. Vertex `merge_into` absorbs the endpoints listed in `merged`.
void build_reduced(ReductionRecord& r, std::span<const VertexId> removed,
                   std::span<const EdgeId> removed_edges,
                   std::span<const VertexId> merged, VertexId merge_into,
                   std::optional<std::pair<VertexId, VertexId>> extra_edge) {
  const MultiGraph& g = r.original;
  r.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (std::find(removed.begin(), removed.end(), v) != removed.end()) continue;
    r.vertex_map[v] = next++;
  }
  auto image = [&](VertexId v) {
    if (std::find(merged.begin(), merged.end(), v) != merged.end()) {
      return r.vertex_map[merge_into];
    }
    return r.vertex_map[v];
  };
  std::vector<std::pair<int, int>> edges;
  r.edge_map.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (std::find(removed_edges.begin(), removed_edges.end(), e) !=
        removed_edges.end()) {
      continue;
    }
    r.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(image(g.edge(e).u), image(g.edge(e).v));
  }
  if (extra_edge) {
    r.new_edge = static_cast<EdgeId>(edges.size());
    edges.emplace_back(r.vertex_map[extra_edge->first],
                       r.vertex_map[extra_edge->second]);
  }
  r.reduced = MultiGraph(next, edges);

  Diagnosis d = validate_input(r.reduced);
  if (!d.ok()) {
    throw InvariantError(std::string("reduced graph is invalid (") +
                         to_string(d.violation) + "): " + d.message);
  }
}

}  // namespace

std::optional<ReductionRecord> reduce_multi_edge(const MultiGraph& g) {
  if (g.vertex_count() <= 2) {
    throw InputError("multi-edge reduction needs more than 2 vertices");
  }
  for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1) {
    VertexId v2 = -1;
    for (EdgeId e : g.incident(v1)) {
      VertexId w = g.edge(e).other(v1);
      if (w > v1 && g.multiplicity(v1, w) >= 2 && (v2 < 0 || w < v2)) v2 = w;
    }
    if (v2 < 0) continue;
    if (g.multiplicity(v1, v2) != 2) {
      throw InvariantError("triple edge in a graph with more than 2 vertices");
    }

    ReductionRecord r;
    r.kind = ReductionKind::kMultiEdge;
    r.original = g;
    r.site = {v1, v2, -1};
    int k = 0;
    for (EdgeId e : g.incident(v1)) {
      if (g.edge(e).other(v1) == v2) r.parallel[k++] = e;
    }
    for (int i = 0; i < 2; ++i) {
      VertexId v = r.site[i];
      for (EdgeId e : g.incident(v)) {
        if (e != r.parallel[0] && e != r.parallel[1]) {
          r.spokes[i] = e;
          r.outer[i] = g.edge(e).other(v);
        }
      }
    }
    if (r.outer[0] == r.outer[1]) {
      throw InvariantError("double edge hangs on a bridge");
    }
    const std::array<VertexId, 2> removed = {v1, v2};
    const std::array<EdgeId, 4> removed_edges = {r.parallel[0], r.parallel[1],
                                                 r.spokes[0], r.spokes[1]};
    build_reduced(r, removed, removed_edges, {}, -1,
                  std::make_pair(r.outer[0], r.outer[1]));
    return r;
  }
  return std::nullopt;
}

std::optional<ReductionRecord> reduce_triangle(const MultiGraph& g) {
  if (!g.is_simple()) throw InputError("triangle reduction needs a simple graph");
  for (VertexId v0 = 0; v0 < g.vertex_count(); ++v0) {
    std::vector<VertexId> nbrs;
    for (EdgeId e : g.incident(v0)) nbrs.push_back(g.edge(e).other(v0));
    std::sort(nbrs.begin(), nbrs.end());
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        VertexId v1 = nbrs[i], v2 = nbrs[j];
        if (v1 < v0 || edge_between(g, v1, v2) < 0) continue;

        ReductionRecord r;
        r.kind = ReductionKind::kTriangle;
        r.original = g;
        r.site = {v0, v1, v2};
        for (int t = 0; t < 3; ++t) {
          VertexId a = r.site[t], b = r.site[(t + 1) % 3];
          r.triangle_edges[t] = edge_between(g, a, b);
        }
        for (int t = 0; t < 3; ++t) {
          VertexId v = r.site[t];
          for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (w != r.site[(t + 1) % 3] && w != r.site[(t + 2) % 3]) {
              r.spokes[t] = e;
              r.outer[t] = w;
            }
          }
        }
        const std::array<VertexId, 2> removed = {v1, v2};
        build_reduced(r, removed, r.triangle_edges, r.site, v0, std::nullopt);
        return r;
      }
    }
  }
  return std::nullopt;
}

std::vector<int> lift_colours(const ReductionRecord& r,
                              std::span<const int> reduced_colours) {
  const MultiGraph& g = r.original;
  std::vector<int> c(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (r.edge_map[e] >= 0) c[e] = reduced_colours[r.edge_map[e]];
  }
  if (r.kind == ReductionKind::kMultiEdge) {
    const int through = reduced_colours[r.new_edge];
    c[r.spokes[0]] = c[r.spokes[1]] = through;
    std::vector<int> others;
    for (EdgeId f : r.reduced.incident(r.vertex_map[r.outer[0]])) {
      if (f != r.new_edge) others.push_back(reduced_colours[f]);
    }
    std::sort(others.begin(), others.end());
    c[r.parallel[0]] = others[0];
    c[r.parallel[1]] = others[1];
  } else {
    for (int t = 0; t < 3; ++t) {
      EdgeId opposite = r.edge_map[r.spokes[(t + 2) % 3]];
      c[r.triangle_edges[t]] = reduced_colours[opposite];
    }
  }
  return c;
}

namespace {

EdgeColouring checked_lift(const ReductionRecord& r, const EdgeColouring& rc) {
  require_proper(r.reduced, rc);
  EdgeColouring c{rc.palette, lift_colours(r, rc.colour)};
  if (!is_proper(r.original, c)) {
    throw InvariantError(std::string("lift through ") + to_string(r.kind) +
                         " reduction produced an improper colouring");
  }
  return c;
}

}  // namespace

EdgeColouring lift_multi_edge(const ReductionRecord& r,
                              const EdgeColouring& rc) {
  if (r.kind != ReductionKind::kMultiEdge) {
    throw InputError("record is not a multi-edge reduction");
  }
  return checked_lift(r, rc);
}

EdgeColouring lift_triangle(const ReductionRecord& r, const EdgeColouring& rc) {
  if (r.kind != ReductionKind::kTriangle) {
    throw InputError("record is not a triangle reduction");
  }
  return checked_lift(r, rc);
}

EdgeColouring lift(const ReductionRecord& r, const EdgeColouring& rc) {
  return checked_lift(r, rc);
}

LocalLiftCheck check_lift_locally(const ReductionRecord& r, int palette) {
  const MultiGraph& g = r.original;
  const MultiGraph& h = r.reduced;
  LocalLiftCheck out;

  std::vector<EdgeId> preimage(h.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (r.edge_map[e] >= 0) preimage[r.edge_map[e]] = e;
  }
  // A G' edge is affected when it is new or its neighbour set, read through
  // the edge correspondence, differs from that of its preimage.
  for (EdgeId f = 0; f < h.edge_count(); ++f) {
    if (preimage[f] < 0) {
      out.reduced_affected.push_back(f);
      continue;
    }
    std::vector<EdgeId> through;
    for (EdgeId x : adjacent_edges(g, preimage[f])) through.push_back(r.edge_map[x]);
    std::sort(through.begin(), through.end());
    if (through != adjacent_edges(h, f)) out.reduced_affected.push_back(f);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (r.edge_map[e] < 0 ||
        std::binary_search(out.reduced_affected.begin(),
                           out.reduced_affected.end(), r.edge_map[e])) {
      out.original_affected.push_back(e);
    }
  }

  std::vector<EdgeId> ball = out.reduced_affected;
  for (EdgeId f : out.reduced_affected) {
    for (EdgeId x : adjacent_edges(h, f)) {
      if (std::find(ball.begin(), ball.end(), x) == ball.end()) ball.push_back(x);
    }
  }

  std::vector<int> rc(h.edge_count(), 0);
  std::function<void(size_t, int)> assign = [&](size_t idx, int max_used) {
    if (idx == ball.size()) {
      ++out.configurations;
      std::vector<int> c = lift_colours(r, rc);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        unsigned seen = 0;
        for (EdgeId e : g.incident(v)) {
          if (c[e] == 0) continue;
          if (seen & (1u << c[e])) {
            ++out.improper_lifts;
            return;
          }
          seen |= 1u << c[e];
        }
      }
      int delta = 0;
      for (EdgeId e : out.original_affected) {
        for (EdgeId x : adjacent_edges(g, e)) {
          if (c[x] == 0) throw InvariantError("local lift check: open neighbourhood");
        }
        delta += classify_unchecked(g, c, e) == EdgeClass::kMedium ? 1 : 0;
      }
      for (EdgeId f : out.reduced_affected) {
        delta -= classify_unchecked(h, rc, f) == EdgeClass::kMedium ? 1 : 0;
      }
      if (out.configurations == 1 || delta > out.max_delta) out.max_delta = delta;
      if (delta > 0) ++out.increases;
      return;
    }
    const EdgeId f = ball[idx];
    const Edge& ed = h.edge(f);
    unsigned blocked = 0;
    for (VertexId w : {ed.u, ed.v}) {
      for (EdgeId x : h.incident(w)) {
        if (x != f && rc[x] != 0) blocked |= 1u << rc[x];
      }
    }
    // Colours above max_used + 1 are renamings of max_used + 1.
    const int top = std::min(palette, max_used + 1);
    for (int col = 1; col <= top; ++col) {
      if (blocked & (1u << col)) continue;
      rc[f] = col;
      assign(idx + 1, std::max(max_used, col));
      rc[f] = 0;
    }
  };
  assign(0, 0);
  return out;
}

}  // namespace pcol
