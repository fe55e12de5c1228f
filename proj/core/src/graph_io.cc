// Copyright 2026 The wlspectra Authors
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
// Text ingestion for edge lists and the TU graph-kernel dataset layout.

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "wlspectra/errors.h"
#include "wlspectra/graph.h"

namespace wlspectra {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, trimmed_line) for non-empty, non-comment lines.
template <typename Fn>
void ForEachContentLine(std::string_view text, Fn&& fn) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

bool ParseInt(std::string_view token, long long& out) {
  if (token.empty()) return false;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Splits on any run of the given separators.
std::vector<std::string_view> Split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    i = s.find_first_not_of(seps, i);
    if (i == std::string_view::npos) break;
    size_t j = s.find_first_of(seps, i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  long long declared_n = -1;
  bool seen_content = false;
  long long max_id = -1;
  std::vector<Edge> edges;
  ForEachContentLine(text, [&](int line_no, std::string_view line) {
    if (!seen_content && line.starts_with("n=")) {
      seen_content = true;
      if (!ParseInt(Trim(line.substr(2)), declared_n) || declared_n < 0) {
        throw ParseError("bad vertex-count header '" + std::string(line) + "'", line_no);
      }
      return;
    }
    seen_content = true;
    const auto tokens = Split(line, " \t");
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !ParseInt(tokens[0], u) || !ParseInt(tokens[1], v) ||
        u < 0 || v < 0) {
      throw ParseError("expected 'u v', got '" + std::string(line) + "'", line_no);
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    }
    if (declared_n >= 0 && std::max(u, v) >= declared_n) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex id exceeds n=" +
                            std::to_string(declared_n));
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  });
  const long long n = declared_n >= 0 ? declared_n : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string ToEdgeList(const Graph& g) {
  std::string out = "n=" + std::to_string(g.num_vertices()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<Graph> ParseTuDataset(std::string_view adjacency_text,
                                  std::string_view indicator_text) {
  std::vector<long long> graph_of;  // global vertex (0-based) -> graph id (1-based)
  ForEachContentLine(indicator_text, [&](int line_no, std::string_view line) {
    long long id = 0;
    if (!ParseInt(line, id) || id < 1) {
      throw ParseError("bad graph id '" + std::string(line) + "'", line_no);
    }
    graph_of.push_back(id);
  });
  const long long num_graphs =
      graph_of.empty() ? 0 : *std::max_element(graph_of.begin(), graph_of.end());
  std::vector<int> sizes(num_graphs, 0);
  std::vector<int> local_id(graph_of.size());
  for (size_t v = 0; v < graph_of.size(); ++v) local_id[v] = sizes[graph_of[v] - 1]++;
  for (long long gid = 0; gid < num_graphs; ++gid) {
    if (sizes[gid] == 0) {
      throw ParseError("graph indicator skips graph id " + std::to_string(gid + 1));
    }
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  ForEachContentLine(adjacency_text, [&](int line_no, std::string_view line) {
    const auto tokens = Split(line, ", \t");
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !ParseInt(tokens[0], u) || !ParseInt(tokens[1], v)) {
      throw ParseError("expected 'u, v', got '" + std::string(line) + "'", line_no);
    }
    const auto total = static_cast<long long>(graph_of.size());
    if (u < 1 || v < 1 || u > total || v > total) {
      throw ParseError("vertex id outside graph indicator range", line_no);
    }
    --u;
    --v;
    if (graph_of[u] != graph_of[v]) {
      throw ParseError("edge " + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                           " spans graphs " + std::to_string(graph_of[u]) + " and " +
                           std::to_string(graph_of[v]),
                       line_no);
    }
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop");
    edges[graph_of[u] - 1].emplace_back(local_id[u], local_id[v]);
  });

  std::vector<Graph> graphs;
  graphs.reserve(num_graphs);
  for (long long gid = 0; gid < num_graphs; ++gid) graphs.emplace_back(sizes[gid], edges[gid]);
  return graphs;
}

}  // namespace wlspectra
