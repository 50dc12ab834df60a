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

#include "pcol/pipeline.hpp"

#include <string>

#include "pcol/error.hpp"
#include "pcol/petersen.hpp"

namespace pcol {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::kThreeColourable: return "3-colourable";
    case Branch::kConstructed: return "constructed";
  }
  return "?";
}

namespace {

bool has_triangle(const MultiGraph& g) {
  for (const Edge& e : g.edges()) {
    for (EdgeId f : g.incident(e.u)) {
      const VertexId w = g.edge(f).other(e.u);
      if (w != e.v && g.multiplicity(w, e.v) > 0) return true;
    }
  }
  return false;
}

EdgeColouring widen(EdgeColouring c) {
  c.palette = 4;
  return c;
}

ConstructionLevel build_level(const MultiGraph& g, const PipelineOptions& opts,
                              bool expect_odd_cycles) {
  ConstructionLevel level;
  level.graph = g;
  level.two_factor = choose_two_factor(g, opts.matching_cap);
  if (expect_odd_cycles && level.two_factor.odd_cycle_count() < 2) {
    throw InvariantError("a graph without a 3-edge-colouring produced a 2-factor with " +
                         std::to_string(level.two_factor.odd_cycle_count()) +
                         " odd cycles");
  }
  level.selection = find_optimal_selection(g, level.two_factor);
  level.components = s_components(g, level.two_factor, level.selection);
  level.construction = construct_colouring(g, level.two_factor, level.selection);
  const ChargeLedger ledger =
      discharge(g, level.two_factor, level.selection, level.construction.colouring);
  level.audit = audit(ledger, g, level.two_factor, level.selection,
                      level.construction.colouring);
  return level;
}

}  // namespace

PipelineResult colour_graph(const MultiGraph& g, const PipelineOptions& opts) {
  require_valid_input(g);
  PipelineResult r;
  r.vertices = g.vertex_count();

  MultiGraph cur = g;
  while (cur.vertex_count() > 2) {
    std::optional<ReductionRecord> rec = reduce_multi_edge(cur);
    if (!rec && has_triangle(cur)) rec = reduce_triangle(cur);
    if (!rec) break;
    cur = rec->reduced;
    r.reductions.push_back(std::move(*rec));
  }

  EdgeColouring col;
  if (cur.vertex_count() == 2) {
    col = EdgeColouring{4, {1, 2, 3}};
  } else if (!opts.force_construction) {
    if (auto three = try_3_edge_colouring(cur)) col = widen(*three);
  }
  if (col.colour.empty()) {
    r.level = build_level(cur, opts, !opts.force_construction);
    r.branch = Branch::kConstructed;
    col = r.level->construction.colouring;
    for (const std::string& f : r.level->audit.failures) {
      r.violations.push_back("discharging audit: " + f);
    }
    for (const std::string& f : audit_bullets(cur, r.level->two_factor,
                                              r.level->selection, col)) {
      r.violations.push_back("construction: " + f);
    }
    for (const std::string& f : audit_cycle_mediums(cur, r.level->two_factor, col)) {
      r.violations.push_back("cycle mediums: " + f);
    }
  }

  r.medium_trace.push_back(medium_count(cur, col));
  for (auto it = r.reductions.rbegin(); it != r.reductions.rend(); ++it) {
    col = lift(*it, col);
    const int now = medium_count(it->original, col);
    if (now > r.medium_trace.back()) {
      r.violations.push_back(std::string("lifting through a ") + to_string(it->kind) +
                             " reduction raised the medium count from " +
                             std::to_string(r.medium_trace.back()) + " to " +
                             std::to_string(now));
    }
    r.medium_trace.push_back(now);
  }

  r.colouring = col;
  r.counts = count_classes(g, col);
  r.is_petersen = is_petersen_graph(g);
  const int n = g.vertex_count();
  r.bound_holds = 5 * r.counts.medium <= 4 * n;
  r.strict_holds = 5 * r.counts.medium < 4 * n;
  if (!r.bound_holds) {
    r.violations.push_back(std::to_string(r.counts.medium) +
                           " medium edges exceed 4n/5 for n = " + std::to_string(n));
  } else if (!r.strict_holds && !r.is_petersen) {
    r.violations.push_back("medium count meets 4n/5 on a graph other than the Petersen graph");
  }
  return r;
}

}  // namespace pcol
