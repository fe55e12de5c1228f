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
#include <algorithm>
#include <string>
#include <vector>

#include "wlspectra/errors.h"
#include "wlspectra/graph.h"

namespace wlspectra {
namespace {

// Depth-first extension of a partial bijection g1 -> g2. A vertex may only
// map to a vertex of equal degree, and every already-mapped pair must agree
// on adjacency. Exhaustive: returns true iff a full isomorphism exists.
class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2)
      : g1_(g1), g2_(g2), map_(g1.num_vertices(), -1), used_(g2.num_vertices(), false) {}

  bool Run() { return Extend(0); }

 private:
  bool Extend(Vertex v) {
    const int n = g1_.num_vertices();
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used_[w] || g1_.degree(v) != g2_.degree(w)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = g1_.has_edge(u, v) == g2_.has_edge(map_[u], w);
      }
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (Extend(v + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<int> SortedDegrees(const Graph& g) {
  std::vector<int> d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool BruteForceIsomorphic(const Graph& g1, const Graph& g2) {
  const int cap = std::max(g1.num_vertices(), g2.num_vertices());
  if (cap > kBruteForceMaxVertices) {
    throw CapabilityError("brute-force isomorphism is capped at " +
                          std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                          std::to_string(cap));
  }
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
    return false;
  }
  if (SortedDegrees(g1) != SortedDegrees(g2)) return false;
  return IsoSearch(g1, g2).Run();
}

}  // namespace wlspectra
