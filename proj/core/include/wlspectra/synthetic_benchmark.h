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
#ifndef WLSPECTRA_SYNTHETIC_BENCHMARK_H_
#define WLSPECTRA_SYNTHETIC_BENCHMARK_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlspectra/graph.h"
#include "wlspectra/spectral.h"

namespace wlspectra {

// One edge toggled on a source graph, in the source's own labeling.
struct Perturbation {
  enum class Kind { kAdd, kRemove };
  Kind kind = Kind::kAdd;
  Edge edge{0, 0};
};

struct BenchmarkInstance {
  Graph graph;  // Permute(perturbed source, permutation)
  int label = 0;
  Perturbation perturbation;
  VertexPermutation permutation = VertexPermutation::Identity(0);
};

// Undoes the relabeling and the edge toggle.
Graph RecoverSource(const BenchmarkInstance& instance);

struct BenchmarkDataset {
  std::array<Graph, 2> sources;
  std::vector<BenchmarkInstance> instances;
  std::vector<int> train;  // ascending instance indices
  std::vector<int> test;
  std::uint64_t seed = 0;
};

// Per instance: a uniformly chosen source, then a uniform choice of add or
// remove (redrawn when the result would be edgeless or complete), a uniform
// eligible edge, and a uniform relabeling. Instances are split 9:1 into
// train/test; when a label has at least two instances and each split has
// at least two entries, both splits contain it. Deterministic in seed.
// Throws ValidationError for count < 2 or a source that admits neither
// operation.
BenchmarkDataset GenerateBenchmark(const Graph& g0, const Graph& g1, int count,
                                   std::uint64_t seed);

// manifest.json content: seed, sources, split and per-instance records.
std::string DatasetManifestJson(const BenchmarkDataset& ds);
// "instance,label,split" rows.
std::string DatasetLabelsCsv(const BenchmarkDataset& ds);
// Writes manifest.json, labels.csv and instances/instance_NNNNN.edges.
void WriteDataset(const BenchmarkDataset& ds, const std::filesystem::path& dir);

std::uint64_t Fnv1a64(std::string_view bytes);

struct CospectralSearchOptions {
  int max_vertices = 9;
  bool connected_only = true;
  double tolerance = 1e-8;
};

struct CospectralPair {
  Graph first;
  Graph second;
  int num_vertices = 0;
  long long graphs_examined = 0;
};

inline constexpr int kCospectralSearchMaxVertices = 9;

// Enumerates labeled graphs by vertex count, then by edge bitmask (bit i of
// the mask is the i-th pair (u,v), u < v, in lexicographic order). Returns
// the first pair (a, b), a before b, minimizing b's position and then a's,
// such that a and b are Laplacian-cospectral and 1-WL distinguishable.
// Distinguishable graphs are never isomorphic. Throws SearchExhaustedError
// if nothing is found and CapabilityError above kCospectralSearchMaxVertices.
CospectralPair FindCospectralWlDistinguishable(const CospectralSearchOptions& options = {});

// Per-vertex feature rows for a graph.
using InstanceFeatureFn = std::function<std::vector<std::vector<double>>(const Graph&)>;

InstanceFeatureFn SpectralFeatureFn(const SpectralConfig& cfg);
// A single 1.0 per vertex.
InstanceFeatureFn ConstantFeatureFn();

// Permutation-invariant instance vector: rows sorted lexicographically, then
// concatenated.
std::vector<double> SortedFlattenedFeatures(std::vector<std::vector<double>> rows);

// Fits one entrywise-mean centroid per label on the train split and returns
// the fraction of test instances whose nearer centroid (Euclidean; ties go
// to label 0) matches their label. Throws ValidationError if a split is
// empty or the train split lacks a label.
double NearestCentroidEval(const BenchmarkDataset& ds, const InstanceFeatureFn& features);
double NearestCentroidEval(const BenchmarkDataset& ds, const SpectralConfig& cfg);

}  // namespace wlspectra

#endif  // WLSPECTRA_SYNTHETIC_BENCHMARK_H_
