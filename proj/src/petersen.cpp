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

#include "pcol/petersen.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

VertexId KneserPetersen::vertex_of(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (VertexId w = 0; w < static_cast<int>(subset.size()); ++w) {
    if (subset[w][0] == a && subset[w][1] == b) return w;
  }
  return -1;
}

EdgeId KneserPetersen::edge_between(VertexId u, VertexId w) const {
  for (EdgeId e : graph.incident(u)) {
    if (graph.edge(e).other(u) == w) return e;
  }
  return -1;
}

EdgeId KneserPetersen::edge_with_label(VertexId w, int lab) const {
  for (EdgeId e : graph.incident(w)) {
    if (label[e] == lab) return e;
  }
  return -1;
}

KneserPetersen build_kneser_petersen() {
  KneserPetersen p;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) p.subset.push_back({a, b});
  }
  auto disjoint = [](const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1];
  };
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(p.subset.size());
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (!disjoint(p.subset[u], p.subset[w])) continue;
      edges.emplace_back(u, w);
      int missing = 15;  // 1 + 2 + 3 + 4 + 5
      missing -= p.subset[u][0] + p.subset[u][1] + p.subset[w][0] + p.subset[w][1];
      p.label.push_back(missing);
    }
  }
  p.graph = MultiGraph(n, edges);
  return p;
}

const KneserPetersen& kneser_petersen() {
  static const KneserPetersen p = build_kneser_petersen();
  return p;
}

std::optional<std::string> check_petersen_colouring(const MultiGraph& g,
                                                    const PetersenColouring& pc) {
  const MultiGraph& p = kneser_petersen().graph;
  if (static_cast<int>(pc.image.size()) != g.edge_count()) {
    return std::string("image size does not match the edge count");
  }
  for (EdgeId x : pc.image) {
    if (x < 0 || x >= p.edge_count()) return "image edge " + std::to_string(x) + " out of range";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) {
        const Edge& a = p.edge(pc.image[inc[i]]);
        const Edge& b = p.edge(pc.image[inc[j]]);
        const bool same = pc.image[inc[i]] == pc.image[inc[j]];
        const bool meet = a.touches(b.u) || a.touches(b.v);
        if (same || !meet) {
          return "edges " + std::to_string(inc[i]) + " and " + std::to_string(inc[j]) +
                 " meet at vertex " + std::to_string(v) +
                 (same ? " but share an image" : " but their images are disjoint");
        }
      }
    }
  }
  return std::nullopt;
}

PetersenColouring normal_to_petersen(const MultiGraph& g, const EdgeColouring& f) {
  if (!is_proper(g, f)) throw InputError("colouring is not proper");
  for (int col : f.colour) {
    if (col < 1 || col > 5) throw InputError("colour outside 1..5");
  }
  const KneserPetersen& kp = kneser_petersen();
  auto image_from = [&](EdgeId e, VertexId end) {
    std::vector<int> others;
    for (EdgeId x : g.incident(end)) {
      if (x != e) others.push_back(f[x]);
    }
    if (others.size() != 2) throw InputError("graph is not cubic");
    return kp.edge_with_label(kp.vertex_of(others[0], others[1]), f[e]);
  };
  PetersenColouring pc;
  pc.image.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeId from_u = image_from(e, g.edge(e).u);
    const EdgeId from_v = image_from(e, g.edge(e).v);
    if (from_u != from_v) {
      throw InputError("edge " + std::to_string(e) + " is medium; colouring is not normal");
    }
    pc.image[e] = from_u;
  }
  if (auto bad = check_petersen_colouring(g, pc)) {
    throw InvariantError("normal colouring induced an invalid Petersen colouring: " + *bad);
  }
  return pc;
}

EdgeColouring petersen_to_normal(const MultiGraph& g, const PetersenColouring& pc) {
  if (auto bad = check_petersen_colouring(g, pc)) {
    throw InputError("not a Petersen colouring: " + *bad);
  }
  EdgeColouring f{5, std::vector<int>(g.edge_count())};
  for (EdgeId e = 0; e < g.edge_count(); ++e) f[e] = kneser_petersen().label[pc.image[e]];
  return f;
}

PetersenColouring trivial_petersen_colouring(const MultiGraph& g,
                                             const EdgeColouring& three_colouring) {
  if (!is_proper(g, three_colouring)) throw InputError("colouring is not proper");
  const KneserPetersen& kp = kneser_petersen();
  const VertexId hub = kp.vertex_of(4, 5);
  PetersenColouring pc;
  for (int col : three_colouring.colour) {
    if (col < 1 || col > 3) throw InputError("not a 3-edge-colouring");
    pc.image.push_back(kp.edge_with_label(hub, col));
  }
  return pc;
}

const char* to_string(PetersenImage k) {
  switch (k) {
    case PetersenImage::kTrivial: return "trivial";
    case PetersenImage::kSurjective: return "surjective";
    case PetersenImage::kNeither: return "neither";
  }
  return "?";
}

PetersenImageReport classify_petersen_colouring(const PetersenColouring& pc) {
  const MultiGraph& p = kneser_petersen().graph;
  PetersenImageReport r;
  r.image = pc.image;
  std::sort(r.image.begin(), r.image.end());
  r.image.erase(std::unique(r.image.begin(), r.image.end()), r.image.end());
  if (static_cast<int>(r.image.size()) == p.edge_count()) {
    r.kind = PetersenImage::kSurjective;
    return r;
  }
  for (VertexId w = 0; w < p.vertex_count(); ++w) {
    if (std::all_of(r.image.begin(), r.image.end(),
                    [&](EdgeId x) { return p.edge(x).touches(w); })) {
      r.kind = PetersenImage::kTrivial;
      return r;
    }
  }
  r.kind = PetersenImage::kNeither;
  return r;
}

int girth(const MultiGraph& g) {
  if (!g.is_simple()) return 2;
  int best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<EdgeId> via(g.vertex_count(), -1);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (e == via[v]) continue;
        VertexId w = g.edge(e).other(v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          q.push(w);
        } else {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g,
                                                      const MultiGraph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (!g.is_simple() || !h.is_simple()) {
    throw InputError("find_isomorphism expects simple graphs");
  }
  auto matrix = [n](const MultiGraph& x) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : x.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    return adj;
  };
  const auto ag = matrix(g), ah = matrix(h);

  // Visit g in BFS order so every vertex after the first has a mapped
  // neighbour, which keeps the candidate lists short.
  std::vector<VertexId> order;
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }

  std::vector<VertexId> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int idx) {
    if (idx == n) return true;
    const VertexId v = order[idx];
    for (VertexId cand = 0; cand < n; ++cand) {
      if (used[cand] || g.degree(v) != h.degree(cand)) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        const VertexId x = order[j];
        ok = ag[v][x] == ah[cand][map[x]];
      }
      if (!ok) continue;
      map[v] = cand;
      used[cand] = 1;
      if (extend(idx + 1)) return true;
      used[cand] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool is_petersen_graph(const MultiGraph& g) {
  if (g.vertex_count() != 10 || g.edge_count() != 15) return false;
  if (!g.is_simple() || !g.is_cubic() || girth(g) != 5) return false;
  return find_isomorphism(g, kneser_petersen().graph).has_value();
}

}  // namespace pcol
