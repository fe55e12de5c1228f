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
#ifndef WLSPECTRA_WL_H_
#define WLSPECTRA_WL_H_

#include <utility>

#include "wlspectra/coloring.h"
#include "wlspectra/graph.h"
#include "wlspectra/precoloring.h"

namespace wlspectra {

// One round of 1-WL color refinement. The new color of v is the rank of
// (c(v), sorted neighbor colors) among all such signatures in g.
Coloring RefineStep(const Graph& g, const Coloring& c);

struct Refinement {
  Coloring coloring;
  // Rounds that split at least one class. Always < n.
  int iterations = 0;
};

Refinement RefineToConvergence(const Graph& g, const Coloring& initial);
Refinement RefineToConvergence(const Graph& g, const PreColoring& pre);

struct JointRefinement {
  ColorHistogram first;
  ColorHistogram second;
  // Stable coloring of the disjoint union; vertices of the second graph
  // start at first.n.
  Coloring union_coloring;
  int iterations = 0;
};

// Refines the disjoint union of g1 and g2 so both histograms share one
// palette.
JointRefinement JointRefine(const Graph& g1, const Graph& g2, const PreColoring& pre);

// Initial (pre-refinement) joint coloring of the disjoint union.
Coloring JointInitialColoring(const Graph& g1, const Graph& g2, const PreColoring& pre);

inline bool Distinguishable(const Graph& g1, const Graph& g2, const PreColoring& pre) {
  const JointRefinement r = JointRefine(g1, g2, pre);
  return r.first != r.second;
}

}  // namespace wlspectra

#endif  // WLSPECTRA_WL_H_
