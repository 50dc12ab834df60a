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

#include "pcol/report.hpp"

#include <sstream>

namespace pcol {

using nlohmann::json;

json colouring_json(const MultiGraph& g, const EdgeColouring& c) {
  json out = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back({g.edge(e).u, g.edge(e).v, c[e]});
  }
  return out;
}

json audit_json(const AuditReport& a) {
  json comps = json::array();
  for (const ComponentCharge& c : a.components) {
    comps.push_back({{"cycles", c.cycles},
                     {"shape", to_string(c.shape)},
                     {"vertices", c.vertices},
                     {"charge_tenths", c.charge},
                     {"strict", c.strict}});
  }
  return {{"passed", a.passed},
          {"failures", a.failures},
          {"warnings", a.warnings},
          {"components", comps},
          {"medium", a.medium},
          {"final_charge_tenths", a.final_total}};
}

json report_json(const std::string& name, const MultiGraph& g, const PipelineResult& r,
                 const std::optional<OracleComparison>& oracle) {
  json reductions = json::array();
  for (const ReductionRecord& rec : r.reductions) {
    reductions.push_back({{"kind", to_string(rec.kind)},
                          {"order_before", rec.original.vertex_count()},
                          {"order_after", rec.reduced.vertex_count()}});
  }
  json two_factor = nullptr, selection = nullptr, audit = nullptr;
  if (r.level) {
    const ConstructionLevel& lv = *r.level;
    std::vector<int> lengths;
    for (int c = 0; c < lv.two_factor.cycle_count(); ++c) lengths.push_back(lv.two_factor.length(c));
    two_factor = {{"order", lv.graph.vertex_count()},
                  {"cycle_lengths", lengths},
                  {"odd_cycles", lv.two_factor.odd_cycle_count()}};
    json edges = json::array(), comps = json::array();
    for (EdgeId e : lv.selection.selected) {
      edges.push_back({lv.graph.edge(e).u, lv.graph.edge(e).v});
    }
    for (const SComponent& c : lv.components) {
      comps.push_back({{"shape", to_string(c.shape)}, {"cycles", c.cycles}});
    }
    selection = {{"size", lv.selection.size()}, {"edges", edges}, {"components", comps}};
    audit = audit_json(lv.audit);
  }
  const int n = g.vertex_count();
  return {
      {"graph", name},
      {"order", n},
      {"size", g.edge_count()},
      {"branch", to_string(r.branch)},
      {"reductions", reductions},
      {"two_factor", two_factor},
      {"selection", selection},
      {"colouring", colouring_json(g, r.colouring)},
      {"counts", {{"poor", r.counts.poor}, {"medium", r.counts.medium}, {"rich", r.counts.rich}}},
      {"bound",
       {{"medium", r.counts.medium},
        {"limit", 4.0 * n / 5.0},
        {"holds", r.bound_holds},
        {"strict", r.strict_holds},
        {"petersen", r.is_petersen}}},
      {"medium_trace", r.medium_trace},
      {"audit", audit},
      {"violations", r.violations},
      {"oracle", oracle ? json{{"k", oracle->k}, {"min_medium", oracle->min_medium}} : json(nullptr)},
  };
}

std::string report_text(const std::string& name, const MultiGraph& g, const PipelineResult& r,
                        const std::optional<OracleComparison>& oracle) {
  std::ostringstream out;
  const int n = g.vertex_count();
  out << "graph      " << name << " (n=" << n << ", m=" << g.edge_count() << ")\n";
  out << "branch     " << to_string(r.branch);
  if (!r.reductions.empty()) {
    out << " after " << r.reductions.size() << " reduction(s):";
    for (const ReductionRecord& rec : r.reductions) out << " " << to_string(rec.kind);
  }
  out << "\n";
  if (r.level) {
    const ConstructionLevel& lv = *r.level;
    out << "2-factor   cycles";
    for (int c = 0; c < lv.two_factor.cycle_count(); ++c) out << " " << lv.two_factor.length(c);
    out << "\n";
    out << "selection  |S|=" << lv.selection.size() << ", components";
    for (const SComponent& c : lv.components) out << " " << to_string(c.shape);
    out << "\n";
    out << "audit      " << (lv.audit.passed ? "passed" : "FAILED") << "\n";
    for (const std::string& f : lv.audit.failures) out << "  - " << f << "\n";
  }
  out << "classes    poor " << r.counts.poor << ", medium " << r.counts.medium << ", rich "
      << r.counts.rich << "\n";
  out << "bound      5*" << r.counts.medium << " = " << 5 * r.counts.medium
      << (r.strict_holds ? " < " : r.bound_holds ? " = " : " > ") << "4n = " << 4 * n
      << (r.is_petersen ? " (Petersen graph)" : "") << "\n";
  if (oracle) out << "oracle     min medium over " << oracle->k << " colours: " << oracle->min_medium << "\n";
  for (const std::string& v : r.violations) out << "VIOLATION  " << v << "\n";
  return out.str();
}

}  // namespace pcol
