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

#include "pcol/corpus.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "pcol/error.hpp"
#include "pcol/io.hpp"

namespace pcol {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;
using Partition = std::vector<std::vector<int>>;

// Multiplicity matrix; the diagonal counts loops.
class Canonizer {
 public:
  Canonizer(int n, const EdgeList& edges) : n_(n), adj_(n, std::vector<int>(n, 0)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
      if (u == v) {
        ++adj_[u][u];
      } else {
        ++adj_[u][v];
        ++adj_[v][u];
      }
    }
  }

  std::string run(std::vector<int>* perm) {
    if (n_ == 0) return "0:";
    Partition start{std::vector<int>(n_)};
    for (int v = 0; v < n_; ++v) start[0][v] = v;
    search(refine(std::move(start)));
    if (perm) *perm = best_perm_;
    return std::to_string(n_) + ":" + best_;
  }

 private:
  // Splits cells by the multiset of multiplicities into every cell until
  // the partition is equitable. Sub-cells are ordered by signature, which
  // depends only on the labelled structure, not on vertex names.
  Partition refine(Partition p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n_);
      for (int c = 0; c < static_cast<int>(p.size()); ++c) {
        for (int v : p[c]) cell_of[v] = c;
      }
      Partition next;
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cell) {
          std::vector<int> sig(p.size() + 1, 0);
          sig[p.size()] = adj_[v][v];
          for (int w = 0; w < n_; ++w) {
            if (w != v) sig[cell_of[w]] += adj_[v][w];
          }
          split[sig].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, part] : split) next.push_back(std::move(part));
      }
      p = std::move(next);
    }
    return p;
  }

  void search(const Partition& p) {
    int target = -1;
    for (int c = 0; c < static_cast<int>(p.size()); ++c) {
      if (p[c].size() > 1 && (target < 0 || p[c].size() < p[target].size())) target = c;
    }
    if (target < 0) {
      leaf(p);
      return;
    }
    for (int v : p[target]) {
      Partition q;
      for (int c = 0; c < static_cast<int>(p.size()); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int w : p[c]) {
          if (w != v) rest.push_back(w);
        }
        q.push_back(std::move(rest));
      }
      search(refine(std::move(q)));
    }
  }

  void leaf(const Partition& p) {
    std::vector<int> order;
    for (const auto& cell : p) order.push_back(cell[0]);
    std::string s;
    s.reserve(n_ * (n_ + 1) / 2);
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) s.push_back(static_cast<char>('0' + adj_[order[i]][order[j]]));
    }
    if (best_.empty() || s < best_) {
      best_ = std::move(s);
      best_perm_.assign(n_, 0);
      for (int i = 0; i < n_; ++i) best_perm_[order[i]] = i;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::string best_;
  std::vector<int> best_perm_;
};

// How far from simple: 2 per loop, 1 per surplus parallel edge. One
// insertion lowers it by at most 2.
int defect(const EdgeList& edges) {
  std::map<std::pair<int, int>, int> mult;
  int d = 0;
  for (auto [u, v] : edges) {
    if (u == v) {
      d += 2;
    } else if (mult[{std::min(u, v), std::max(u, v)}]++ > 0) {
      ++d;
    }
  }
  return d;
}

struct Pseudo {
  int n;
  EdgeList edges;
};

std::vector<Pseudo> children(const Pseudo& g) {
  std::vector<Pseudo> out;
  const int m = static_cast<int>(g.edges.size());
  const int x = g.n, y = g.n + 1;
  auto subdivided = [&](int skip1, int skip2) {
    EdgeList e;
    for (int i = 0; i < m; ++i) {
      if (i != skip1 && i != skip2) e.push_back(g.edges[i]);
    }
    return e;
  };
  for (int i = 0; i < m; ++i) {
    auto [a, b] = g.edges[i];
    for (int j = i + 1; j < m; ++j) {
      auto [c, d] = g.edges[j];
      EdgeList e = subdivided(i, j);
      e.insert(e.end(), {{a, x}, {x, b}, {c, y}, {y, d}, {x, y}});
      out.push_back({g.n + 2, std::move(e)});
    }
    EdgeList twice = subdivided(i, -1);
    twice.insert(twice.end(), {{a, x}, {x, y}, {y, b}, {x, y}});
    out.push_back({g.n + 2, std::move(twice)});
    EdgeList looped = subdivided(i, -1);
    looped.insert(looped.end(), {{a, x}, {x, b}, {x, y}, {y, y}});
    out.push_back({g.n + 2, std::move(looped)});
  }
  return out;
}

}  // namespace

std::string canonical_certificate(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<int>* perm) {
  return Canonizer(n, edges).run(perm);
}

std::string canonical_certificate(const MultiGraph& g) {
  EdgeList e;
  for (const Edge& ed : g.edges()) e.emplace_back(ed.u, ed.v);
  return canonical_certificate(g.vertex_count(), e);
}

MultiGraph canonical_relabel(const MultiGraph& g) {
  EdgeList e;
  for (const Edge& ed : g.edges()) e.emplace_back(ed.u, ed.v);
  std::vector<int> perm;
  canonical_certificate(g.vertex_count(), e, &perm);
  for (auto& [u, v] : e) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(e.begin(), e.end());
  return MultiGraph(g.vertex_count(), e);
}

std::vector<MultiGraph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0) {
    throw InputError("cubic graphs need an even order of at least 4");
  }
  std::vector<Pseudo> level{{2, {{0, 1}, {0, 1}, {0, 1}}}, {2, {{0, 0}, {0, 1}, {1, 1}}}};
  for (int order = 4; order <= n; order += 2) {
    std::vector<Pseudo> next;
    std::unordered_set<std::string> seen;
    for (const Pseudo& g : level) {
      for (Pseudo& h : children(g)) {
        if (defect(h.edges) > n - order) continue;
        if (seen.insert(canonical_certificate(h.n, h.edges)).second) {
          next.push_back(std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, MultiGraph>> keyed;
  for (const Pseudo& g : level) {
    MultiGraph mg = canonical_relabel(MultiGraph(g.n, g.edges));
    keyed.emplace_back(to_graph6(mg), std::move(mg));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MultiGraph> out;
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

std::vector<MultiGraph> bridgeless_cubic_graphs(int n) {
  std::vector<MultiGraph> out;
  for (MultiGraph& g : connected_cubic_graphs(n)) {
    if (find_bridges(g).empty()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pcol
