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

#include "pcol/io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "pcol/error.hpp"

namespace pcol {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int sextet(char ch) {
  if (ch < 63 || ch > 126) {
    throw InputError(std::string("invalid graph6 character '") + ch + "'");
  }
  return ch - 63;
}

// Lines with comments stripped, blank lines dropped, numbered from 1.
std::vector<std::pair<int, std::string>> meaningful_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (!v.empty()) out.emplace_back(no, std::string(v));
  }
  return out;
}

// Parses exactly `count` integers from a line.
std::vector<long> integers(const std::string& line, int count, int line_no) {
  std::istringstream in(line);
  std::vector<long> out;
  long x;
  while (in >> x) out.push_back(x);
  if (!in.eof() || static_cast<int>(out.size()) != count) {
    throw InputError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(count) + " integers");
  }
  return out;
}

}  // namespace

MultiGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw InputError("empty graph6 string");
  size_t pos = 0;
  long n = 0;
  auto take = [&](int chars) {
    long v = 0;
    for (int i = 0; i < chars; ++i) {
      if (pos >= line.size()) throw InputError("graph6 order field truncated");
      v = (v << 6) | sextet(line[pos++]);
    }
    return v;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw InputError("graph6 order too large");
  const long bits = n * (n - 1) / 2;
  const long want = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) != want) {
    throw InputError("graph6 body has " + std::to_string(line.size() - pos) +
                     " characters, expected " + std::to_string(want));
  }
  std::vector<std::pair<int, int>> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (long r = k; r < want * 6; ++r) {
    if ((sextet(line[pos + r / 6]) >> (5 - r % 6)) & 1) {
      throw InputError("graph6 padding bits are not zero");
    }
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph(static_cast<int>(n), edges);
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw InputError("graph6 cannot encode parallel edges");
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  std::vector<char> bit(n * (n - 1) / 2 + 1, 0);
  for (const Edge& e : g.edges()) {
    const long i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    bit[j * (j - 1) / 2 + i] = 1;
  }
  const long bits = n * (n - 1) / 2;
  for (long k = 0; k < bits; k += 6) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) chunk = (chunk << 1) | (k + b < bits ? bit[k + b] : 0);
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

MultiGraph parse_edge_list(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw InputError("edge list is empty");
  std::istringstream head(lines[0].second);
  std::string tag;
  long n = -1;
  head >> tag >> n;
  std::string extra;
  if (tag != "n" || n < 0 || head.fail() || (head >> extra)) {
    throw InputError("edge list must start with a line \"n <count>\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto uv = integers(lines[i].second, 2, lines[i].first);
    if (uv[0] == uv[1]) {
      throw InputError("line " + std::to_string(lines[i].first) + ": loop at vertex " +
                       std::to_string(uv[0]));
    }
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) {
      throw InputError("line " + std::to_string(lines[i].first) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  return MultiGraph(static_cast<int>(n), edges);
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

MultiGraph parse_graph_text(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw InputError("no graph found");
  if (lines[0].second.starts_with("n ") || lines[0].second == "n") {
    return parse_edge_list(text);
  }
  if (lines.size() > 1) throw InputError("expected a single graph6 line");
  return parse_graph6(lines[0].second);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> graph6_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = trim(line);
    if (v.empty() || v.front() == '#') continue;
    out.emplace_back(v);
  }
  return out;
}

EdgeColouring parse_colouring(const MultiGraph& g, std::string_view text) {
  std::map<std::pair<int, int>, std::deque<EdgeId>> slots;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    slots[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  EdgeColouring c{3, std::vector<int>(g.edge_count(), 0)};
  for (const auto& [no, line] : meaningful_lines(text)) {
    const auto t = integers(line, 3, no);
    auto it = slots.find({std::min(t[0], t[1]), std::max(t[0], t[1])});
    if (it == slots.end() || it->second.empty()) {
      throw InputError("line " + std::to_string(no) + ": no remaining edge " +
                       std::to_string(t[0]) + "-" + std::to_string(t[1]));
    }
    if (t[2] < 1 || t[2] > 64) {
      throw InputError("line " + std::to_string(no) + ": colour out of range");
    }
    c[it->second.front()] = static_cast<int>(t[2]);
    it->second.pop_front();
    c.palette = std::max(c.palette, static_cast<int>(t[2]));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c[e] == 0) {
      throw InputError("edge " + std::to_string(g.edge(e).u) + "-" +
                       std::to_string(g.edge(e).v) + " has no colour");
    }
  }
  return c;
}

std::string format_colouring(const MultiGraph& g, const EdgeColouring& c) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << " " << g.edge(e).v << " " << c[e] << "\n";
  }
  return out.str();
}

}  // namespace pcol
