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

#ifndef PCOL_REPORT_HPP_
#define PCOL_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "pcol/graph.hpp"
#include "pcol/oracle.hpp"
#include "pcol/pipeline.hpp"

namespace pcol {

// Oracle figures attached to a colouring report.
struct OracleComparison {
  int k = 4;
  int min_medium = 0;
};

// Every key is always present; parts that do not apply are null.
nlohmann::json report_json(const std::string& name, const MultiGraph& g,
                           const PipelineResult& r,
                           const std::optional<OracleComparison>& oracle = std::nullopt);

std::string report_text(const std::string& name, const MultiGraph& g,
                        const PipelineResult& r,
                        const std::optional<OracleComparison>& oracle = std::nullopt);

nlohmann::json audit_json(const AuditReport& a);

nlohmann::json colouring_json(const MultiGraph& g, const EdgeColouring& c);

}  // namespace pcol

#endif  // PCOL_REPORT_HPP_
