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
#include "wlspectra/graph.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "wlspectra/errors.h"

namespace wlspectra {

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : num_vertices_(num_vertices), adjacency_(num_vertices) {
  if (num_vertices < 0) throw ValidationError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} out of range for n=" + std::to_string(num_vertices));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexPermutation::VertexPermutation(std::vector<Vertex> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (Vertex v : mapping_) {
    if (v < 0 || v >= static_cast<int>(mapping_.size()) || seen[v]) {
      throw ValidationError("vertex mapping is not a bijection");
    }
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::Identity(int n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), 0);
  return VertexPermutation(std::move(m));
}

VertexPermutation VertexPermutation::Inverse() const {
  std::vector<Vertex> inv(mapping_.size());
  for (int v = 0; v < size(); ++v) inv[mapping_[v]] = v;
  return VertexPermutation(std::move(inv));
}

VertexPermutation Compose(const VertexPermutation& outer,
                          const VertexPermutation& inner) {
  if (outer.size() != inner.size()) {
    throw ValidationError("cannot compose permutations of different sizes");
  }
  std::vector<Vertex> m(inner.size());
  for (int v = 0; v < inner.size(); ++v) m[v] = outer(inner(v));
  return VertexPermutation(std::move(m));
}

Graph Permute(const Graph& g, const VertexPermutation& sigma) {
  if (sigma.size() != g.num_vertices()) {
    throw ValidationError("permutation size " + std::to_string(sigma.size()) +
                          " does not match graph size " +
                          std::to_string(g.num_vertices()));
  }
  std::vector<Edge> mapped;
  mapped.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) mapped.emplace_back(sigma(u), sigma(v));
  return Graph(g.num_vertices(), mapped);
}

Graph DisjointUnion(std::span<const Graph> graphs) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : graphs) {
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += g.num_vertices();
  }
  return Graph(offset, edges);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const Graph both[] = {a, b};
  return DisjointUnion(both);
}

Graph WithEdgeAdded(const Graph& g, Edge e) {
  if (g.has_edge(e.first, e.second)) throw ValidationError("edge already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.num_vertices(), edges);
}

Graph WithEdgeRemoved(const Graph& g, Edge e) {
  Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  std::vector<Edge> edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), key);
  if (it == edges.end()) throw ValidationError("edge not present");
  edges.erase(it);
  return Graph(g.num_vertices(), edges);
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph EmptyGraph(int n) { return Graph(n, std::span<const Edge>{}); }

namespace {

// Laplacian-cospectral, 1-WL-distinguishable pair found by the enumeration
// in cospectral_search.cc; frozen so callers need not rerun the search.
constexpr std::string_view kCospectralAEdges =
    "n=6\n0 2\n0 3\n0 4\n0 5\n1 4\n1 5\n2 3\n";
constexpr std::string_view kCospectralBEdges =
    "n=6\n0 2\n0 4\n0 5\n1 2\n1 4\n1 5\n2 3\n";

void AddCycle(std::initializer_list<Vertex> cycle, std::vector<Edge>& edges) {
  const Vertex* c = cycle.begin();
  const int len = static_cast<int>(cycle.size());
  for (int i = 0; i < len; ++i) edges.emplace_back(c[i], c[(i + 1) % len]);
}

}  // namespace

Graph MakeReferenceGraph(ReferenceGraph which) {
  std::vector<Edge> edges;
  switch (which) {
    case ReferenceGraph::kDecalin:
      // The shared edge {0,1} closes both rings.
      AddCycle({0, 2, 3, 4, 5, 1}, edges);
      AddCycle({0, 6, 7, 8, 9, 1}, edges);
      return Graph(10, edges);
    case ReferenceGraph::kBicyclopentyl:
      AddCycle({0, 1, 2, 3, 4}, edges);
      AddCycle({5, 6, 7, 8, 9}, edges);
      edges.emplace_back(0, 5);
      return Graph(10, edges);
    case ReferenceGraph::kCospectralA:
      return ParseEdgeList(kCospectralAEdges);
    case ReferenceGraph::kCospectralB:
      return ParseEdgeList(kCospectralBEdges);
  }
  throw ValidationError("unknown reference graph");
}

ReferenceGraph ParseReferenceGraphName(std::string_view name) {
  if (name == "decalin") return ReferenceGraph::kDecalin;
  if (name == "bicyclopentyl") return ReferenceGraph::kBicyclopentyl;
  if (name == "cospectral_a") return ReferenceGraph::kCospectralA;
  if (name == "cospectral_b") return ReferenceGraph::kCospectralB;
  throw ValidationError("unknown reference graph '" + std::string(name) + "'");
}

}  // namespace wlspectra
