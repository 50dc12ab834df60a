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

#include "pcol/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pcol/error.hpp"

namespace pcol {

namespace {

class ColouringSearch {
 public:
  enum class Mode { kMinimise, kNormal };

  ColouringSearch(const MultiGraph& g, int k, const SearchOptions& opts)
      : g_(g), k_(k), opts_(opts), colour_(g.edge_count(), 0) {
    order_edges();
    const int m = g.edge_count();
    neighbours_.resize(m);
    std::vector<int> rank(m);
    for (int i = 0; i < m; ++i) rank[order_[i]] = i;
    finalised_at_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      neighbours_[e] = adjacent_edges(g, e);
      int last = rank[e];
      for (EdgeId f : neighbours_[e]) last = std::max(last, rank[f]);
      finalised_at_[last].push_back(e);
    }
  }

  // Minimum medium count; best_ stays at m + 1 when nothing proper exists.
  void minimise() {
    mode_ = Mode::kMinimise;
    best_ = g_.edge_count() + 1;
    descend(0, 0, 0);
  }

  void enumerate_normal(long limit,
                        const std::function<bool(const EdgeColouring&)>& visit) {
    mode_ = Mode::kNormal;
    limit_ = limit;
    visit_ = &visit;
    descend(0, 0, 0);
  }

  int best() const { return best_; }
  const std::vector<int>& best_colour() const { return best_colour_; }
  long nodes() const { return nodes_; }
  long found() const { return found_; }

 private:
  void order_edges() {
    const int n = g_.vertex_count();
    std::vector<char> seen_v(n, 0), seen_e(g_.edge_count(), 0);
    for (VertexId s = 0; s < n; ++s) {
      if (seen_v[s]) continue;
      std::queue<VertexId> q;
      q.push(s);
      seen_v[s] = 1;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : g_.incident(v)) {
          if (!seen_e[e]) {
            seen_e[e] = 1;
            order_.push_back(e);
          }
          VertexId w = g_.edge(e).other(v);
          if (!seen_v[w]) {
            seen_v[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }

  // Returns false to stop the whole search.
  bool descend(int idx, int max_used, int mediums) {
    ++nodes_;
    if (idx == static_cast<int>(order_.size())) return leaf(mediums);
    const EdgeId e = order_[idx];
    const int top = opts_.symmetry_breaking ? std::min(k_, max_used + 1) : k_;
    for (int col = 1; col <= top; ++col) {
      bool clash = false;
      for (EdgeId f : neighbours_[e]) {
        if (colour_[f] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[e] = col;
      int now = mediums;
      for (EdgeId f : finalised_at_[idx]) {
        if (classify_unchecked(g_, colour_, f) == EdgeClass::kMedium) ++now;
      }
      const bool prune = mode_ == Mode::kNormal ? now > 0 : now >= best_;
      if (!prune && !descend(idx + 1, std::max(max_used, col), now)) {
        colour_[e] = 0;
        return false;
      }
      colour_[e] = 0;
    }
    return true;
  }

  bool leaf(int mediums) {
    if (mode_ == Mode::kMinimise) {
      if (mediums < best_) {
        best_ = mediums;
        best_colour_ = colour_;
      }
      return best_ > 0;
    }
    ++found_;
    const bool more = (*visit_)(EdgeColouring{k_, colour_});
    return more && found_ < limit_;
  }

  const MultiGraph& g_;
  const int k_;
  const SearchOptions opts_;
  std::vector<int> colour_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<EdgeId>> neighbours_;
  std::vector<std::vector<EdgeId>> finalised_at_;  // by order index

  Mode mode_ = Mode::kMinimise;
  int best_ = 0;
  std::vector<int> best_colour_;
  long limit_ = 0;
  const std::function<bool(const EdgeColouring&)>* visit_ = nullptr;
  long nodes_ = 0;
  long found_ = 0;
};

void require_palette(int k) {
  if (k < 3 || k > 6) throw InputError("palette size must be in 3..6, got " + std::to_string(k));
}

}  // namespace

MinMediumResult min_medium_exact(const MultiGraph& g, int k,
                                 const SearchOptions& opts) {
  require_palette(k);
  ColouringSearch search(g, k, opts);
  search.minimise();
  if (search.best() > g.edge_count()) {
    throw InputError("no proper " + std::to_string(k) + "-edge-colouring exists");
  }
  return {search.best(), EdgeColouring{k, search.best_colour()}, search.nodes()};
}

std::optional<EdgeColouring> exists_normal(const MultiGraph& g, int k,
                                           const SearchOptions& opts) {
  std::optional<EdgeColouring> out;
  for_each_normal(g, k, 1, [&](const EdgeColouring& c) {
    out = c;
    return false;
  }, opts);
  return out;
}

long for_each_normal(const MultiGraph& g, int k, long limit,
                     const std::function<bool(const EdgeColouring&)>& visit,
                     const SearchOptions& opts) {
  require_palette(k);
  if (limit <= 0) return 0;
  ColouringSearch search(g, k, opts);
  search.enumerate_normal(limit, visit);
  return search.found();
}

ConjectureReport verify_conjecture_on(const MultiGraph& g) {
  ConjectureReport r;
  r.witness = exists_normal(g, 5);
  r.holds = r.witness.has_value();
  if (!r.holds) return r;
  r.petersen = normal_to_petersen(g, *r.witness);
  r.round_trip = petersen_to_normal(g, *r.petersen).colour == r.witness->colour;
  r.image = classify_petersen_colouring(*r.petersen);
  r.image_consistent =
      r.image->kind == PetersenImage::kSurjective || try_3_edge_colouring(g).has_value();
  return r;
}

}  // namespace pcol
