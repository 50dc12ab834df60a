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

#ifndef PCOL_IO_HPP_
#define PCOL_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pcol/colouring.hpp"
#include "pcol/graph.hpp"

namespace pcol {

// graph6, with or without the ">>graph6<<" header. Edges come out in
// lexicographic (u, v) order. Throws InputError on a bad character or a
// bit stream of the wrong length.
MultiGraph parse_graph6(std::string_view line);

// g must be simple.
std::string to_graph6(const MultiGraph& g);

// A header line "n <count>" followed by "u v" lines; '#' starts a comment.
// Repeated lines give parallel edges.
MultiGraph parse_edge_list(std::string_view text);

std::string to_edge_list(const MultiGraph& g);

// Edge-list when the first meaningful token is "n", graph6 otherwise.
MultiGraph parse_graph_text(std::string_view text);

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

// Non-empty, non-comment lines of a graph6 stream.
std::vector<std::string> graph6_lines(std::istream& in);

// One "u v colour" line per edge, in any order. Parallel edges take the
// listed colours in edge-id order. The palette is the largest colour seen,
// but at least 3.
EdgeColouring parse_colouring(const MultiGraph& g, std::string_view text);

std::string format_colouring(const MultiGraph& g, const EdgeColouring& c);

}  // namespace pcol

#endif  // PCOL_IO_HPP_
