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
#include "wlspectra/wl.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "wlspectra/errors.h"

namespace wlspectra {

Coloring RefineStep(const Graph& g, const Coloring& c) {
  const int n = g.num_vertices();
  if (c.size() != n) throw ValidationError("coloring does not cover the graph");
  // signature(v) = [c(v), sorted neighbor colors...]
  std::vector<std::vector<int>> signatures(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& sig = signatures[v];
    sig.reserve(1 + g.degree(v));
    sig.push_back(c[v]);
    for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
    std::sort(sig.begin() + 1, sig.end());
  }
  return Coloring::FromKeys(std::span<const std::vector<int>>(signatures));
}

Refinement RefineToConvergence(const Graph& g, const Coloring& initial) {
  Refinement r{Coloring::FromKeys(std::span<const int>(initial.colors())), 0};
  for (;;) {
    Coloring next = RefineStep(g, r.coloring);
    // Each step refines its input, so an unchanged class count means an
    // unchanged partition.
    if (next.palette_size() == r.coloring.palette_size()) break;
    r.coloring = std::move(next);
    ++r.iterations;
  }
  return r;
}

Refinement RefineToConvergence(const Graph& g, const PreColoring& pre) {
  return RefineToConvergence(g, pre.Apply(g));
}

Coloring JointInitialColoring(const Graph& g1, const Graph& g2, const PreColoring& pre) {
  const Graph both[] = {g1, g2};
  auto keys = pre.JointKeys(both);
  std::vector<ColorKey> flat = std::move(keys[0]);
  flat.insert(flat.end(), std::make_move_iterator(keys[1].begin()),
              std::make_move_iterator(keys[1].end()));
  return Coloring::FromKeys(std::span<const ColorKey>(flat));
}

JointRefinement JointRefine(const Graph& g1, const Graph& g2, const PreColoring& pre) {
  const Graph joint = DisjointUnion(g1, g2);
  Refinement r = RefineToConvergence(joint, JointInitialColoring(g1, g2, pre));
  const auto& colors = r.coloring.colors();
  const int n1 = g1.num_vertices();
  JointRefinement out;
  out.first = Histogram(std::span<const int>(colors.data(), n1));
  out.second = Histogram(std::span<const int>(colors.data() + n1, colors.size() - n1));
  out.union_coloring = std::move(r.coloring);
  out.iterations = r.iterations;
  return out;
}

}  // namespace wlspectra
