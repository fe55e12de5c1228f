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

#ifndef WLSPECTRA_GRAPH_H_
#define WLSPECTRA_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wlspectra {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // Always stored with first < second.

// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Reversed duplicates are merged;
  // self-loops and out-of-range endpoints throw ValidationError.
  Graph(int num_vertices, std::span<const Edge> edges);
  Graph(int num_vertices, std::initializer_list<Edge> edges)
      : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Sorted, each edge as (min, max).
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[v].data(), adjacency_[v].size()};
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_complete() const {
    return 2LL * num_edges() ==
           static_cast<long long>(num_vertices_) * (num_vertices_ - 1);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A bijection on 0..n-1; image(v) is where v is sent.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Vertex> mapping);
  static VertexPermutation Identity(int n);

  int size() const { return static_cast<int>(mapping_.size()); }
  Vertex operator()(Vertex v) const { return mapping_[v]; }
  const std::vector<Vertex>& mapping() const { return mapping_; }

  VertexPermutation Inverse() const;
  // (outer ∘ inner)(v) = outer(inner(v)).
  friend VertexPermutation Compose(const VertexPermutation& outer,
                                   const VertexPermutation& inner);

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> mapping_;
};

// Relabels g so that edge {u,v} becomes {sigma(u), sigma(v)}.
Graph Permute(const Graph& g, const VertexPermutation& sigma);

// Vertices of a are 0..a.n-1, vertices of b are shifted by a.n.
Graph DisjointUnion(const Graph& a, const Graph& b);
Graph DisjointUnion(std::span<const Graph> graphs);

// Adds (or removes) one edge; throws ValidationError if the edge is already
// present (or absent).
Graph WithEdgeAdded(const Graph& g, Edge e);
Graph WithEdgeRemoved(const Graph& g, Edge e);

bool IsConnected(const Graph& g);

// Small named families used throughout the tests.
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph EmptyGraph(int n);

enum class ReferenceGraph {
  kDecalin,        // two 6-cycles sharing an edge
  kBicyclopentyl,  // two 5-cycles joined by a bridge
  kCospectralA,    // frozen output of FindCospectralWlDistinguishable(9)
  kCospectralB,
};

Graph MakeReferenceGraph(ReferenceGraph which);
// Accepts "decalin", "bicyclopentyl", "cospectral_a", "cospectral_b".
ReferenceGraph ParseReferenceGraphName(std::string_view name);

// ---- text formats --------------------------------------------------------

// Line-oriented edge list: '#' comments, optional leading "n=<count>",
// then one "u v" pair per line.
Graph ParseEdgeList(std::string_view text);
// Inverse of ParseEdgeList; always writes the n= header.
std::string ToEdgeList(const Graph& g);

// TU distribution layout: DS_A.txt lines "u, v" (1-based global ids) and
// DS_graph_indicator.txt with one graph id per vertex line. Graph ids must
// be contiguous starting at 1; vertices of each graph must be contiguous.
std::vector<Graph> ParseTuDataset(std::string_view adjacency_text,
                                  std::string_view indicator_text);

// ---- isomorphism oracle --------------------------------------------------

inline constexpr int kBruteForceMaxVertices = 10;

// Exhaustive search over all bijections after cheap invariant checks.
// Throws CapabilityError when n exceeds kBruteForceMaxVertices.
bool BruteForceIsomorphic(const Graph& g1, const Graph& g2);

}  // namespace wlspectra

#endif  // WLSPECTRA_GRAPH_H_
