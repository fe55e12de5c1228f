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
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "wlspectra/errors.h"
#include "wlspectra/synthetic_benchmark.h"
#include "wlspectra/wl.h"

namespace wlspectra {
namespace {

std::vector<Edge> AllPairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

Graph FromMask(int n, const std::vector<Edge>& pairs, unsigned long long mask) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1ULL) edges.push_back(pairs[i]);
  return Graph(n, edges);
}

// (|E|, tr L^2, tr L^3, tr L^4) in exact integer arithmetic. Cospectral
// graphs always share it, so it is a safe bucketing key.
std::array<long long, 4> TraceKey(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<long long> l(n * n, 0);
  for (Vertex v = 0; v < n; ++v) l[v * n + v] = g.degree(v);
  for (auto [u, v] : g.edges()) l[u * n + v] = l[v * n + u] = -1;
  auto multiply = [n](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
  };
  auto trace = [n](const std::vector<long long>& a) {
    long long t = 0;
    for (int i = 0; i < n; ++i) t += a[i * n + i];
    return t;
  };
  const auto l2 = multiply(l, l);
  const auto l3 = multiply(l2, l);
  const auto l4 = multiply(l2, l2);
  return {g.num_edges(), trace(l2), trace(l3), trace(l4)};
}

struct Representative {
  Graph graph;
  std::vector<double> eigenvalues;
};

bool SameSpectrum(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

CospectralPair FindCospectralWlDistinguishable(const CospectralSearchOptions& options) {
  if (options.max_vertices > kCospectralSearchMaxVertices) {
    throw CapabilityError("cospectral search is capped at " +
                          std::to_string(kCospectralSearchMaxVertices) + " vertices");
  }
  const ConstantPreColoring constant;
  long long examined = 0;
  for (int n = 1; n <= options.max_vertices; ++n) {
    const auto pairs = AllPairs(n);
    const unsigned long long limit = 1ULL << pairs.size();
    // Each bucket keeps the first-seen member of every (spectrum, 1-WL
    // class) it has met. 1-WL equivalence is transitive, so comparing a new
    // graph against these representatives finds the earliest partner.
    std::map<std::array<long long, 4>, std::vector<Representative>> buckets;
    for (unsigned long long mask = 0; mask < limit; ++mask) {
      Graph g = FromMask(n, pairs, mask);
      if (options.connected_only && !IsConnected(g)) continue;
      ++examined;
      auto& reps = buckets[TraceKey(g)];
      std::vector<double> eigenvalues = Decompose(g).eigenvalues;
      bool joins_existing_class = false;
      for (const Representative& rep : reps) {
        if (!SameSpectrum(rep.eigenvalues, eigenvalues, options.tolerance)) continue;
        if (Distinguishable(rep.graph, g, constant)) {
          return CospectralPair{rep.graph, std::move(g), n, examined};
        }
        joins_existing_class = true;
      }
      if (!joins_existing_class) reps.push_back({std::move(g), std::move(eigenvalues)});
    }
  }
  throw SearchExhaustedError("no Laplacian-cospectral, 1-WL-distinguishable pair with at most " +
                             std::to_string(options.max_vertices) + " vertices");
}

}  // namespace wlspectra
