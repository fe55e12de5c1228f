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
#ifndef WLSPECTRA_KWL_H_
#define WLSPECTRA_KWL_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlspectra/coloring.h"
#include "wlspectra/graph.h"
#include "wlspectra/precoloring.h"

namespace wlspectra {

inline constexpr int kKwlMaxArity = 3;
inline constexpr int kKwlMaxVertices = 10;

// Colors of all n^k ordered k-tuples of one graph. Tuples are indexed in
// mixed radix: (v_0, ..., v_{k-1}) -> sum v_i * n^(k-1-i).
//
// When produced by the joint routines below, ids are drawn from a palette
// shared with the other graphs; palette_size is the shared size and an
// individual graph need not use every id.
class TupleColoring {
 public:
  TupleColoring(int arity, int num_vertices, std::vector<int> colors, int palette_size);

  int arity() const { return arity_; }
  int num_vertices() const { return num_vertices_; }
  int palette_size() const { return palette_size_; }
  int num_tuples() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }

  int Index(std::span<const Vertex> tuple) const;
  std::vector<Vertex> Tuple(int index) const;
  int color(std::span<const Vertex> tuple) const { return colors_[Index(tuple)]; }
  int DiagonalIndex(Vertex v) const;

  ColorHistogram Histogram() const { return wlspectra::Histogram(colors_); }

  // {"k":..,"n":..,"palette_size":..,"tuples":[{"t":[..],"c":..},...]}
  std::string ToDebugJson() const;

 private:
  int arity_;
  int num_vertices_;
  std::vector<int> colors_;
  int palette_size_;
};

struct KwlResult {
  std::vector<TupleColoring> colorings;  // one per input graph
  int iterations = 0;
};

// Initial coloring by ordered induced-subgraph isomorphism type, shared
// across all graphs. Throws CapabilityError outside k in {2,3} or above
// kKwlMaxVertices.
KwlResult KwlInitialize(std::span<const Graph> graphs, int k);
// Runs the substitution-multiset refinement to its fixed point.
KwlResult KwlRefineToConvergence(std::span<const Graph> graphs, int k);
// One refinement round on an existing joint coloring.
KwlResult KwlRefineStep(std::span<const Graph> graphs, const KwlResult& current);

std::pair<TupleColoring, TupleColoring> KwlInitialize(const Graph& g1, const Graph& g2, int k);
std::pair<TupleColoring, TupleColoring> KwlRefineToConvergence(const Graph& g1,
                                                               const Graph& g2, int k);

// Color of (v,...,v) per vertex, kept in the tuple palette's id space.
std::vector<int> DiagonalColors(const TupleColoring& tc);
// Same, as a dense per-graph Coloring.
Coloring DiagonalColoring(const TupleColoring& tc);

// Both sides of "diagonal histograms equal <=> full tuple histograms equal"
// for a converged joint k-WL run.
struct DiagonalEquivalenceCheck {
  bool diagonal_histograms_equal = false;
  bool full_histograms_equal = false;
  bool holds() const { return diagonal_histograms_equal == full_histograms_equal; }
};

DiagonalEquivalenceCheck CheckDiagonalEquivalence(const Graph& g1, const Graph& g2, int k);

// Pre-coloring by the converged k-WL diagonal. Joint keys come from a
// single k-WL run over all graphs so the palettes line up.
class DiagonalKwlPreColoring final : public PreColoring {
 public:
  explicit DiagonalKwlPreColoring(int k);

  std::string name() const override { return "diag-" + std::to_string(k_) + "wl"; }
  std::vector<ColorKey> Keys(const Graph& g) const override;
  std::vector<std::vector<ColorKey>> JointKeys(std::span<const Graph> graphs) const override;

 private:
  int k_;
};

}  // namespace wlspectra

#endif  // WLSPECTRA_KWL_H_
