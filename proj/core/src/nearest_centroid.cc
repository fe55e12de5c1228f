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
#include <array>
#include <cmath>

#include "wlspectra/errors.h"
#include "wlspectra/synthetic_benchmark.h"

namespace wlspectra {

InstanceFeatureFn SpectralFeatureFn(const SpectralConfig& cfg) {
  cfg.Validate();
  return [cfg](const Graph& g) { return ComputeSpectralFeatures(g, cfg).Rows(); };
}

InstanceFeatureFn ConstantFeatureFn() {
  return [](const Graph& g) {
    return std::vector<std::vector<double>>(g.num_vertices(), std::vector<double>{1.0});
  };
}

std::vector<double> SortedFlattenedFeatures(std::vector<std::vector<double>> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

double NearestCentroidEval(const BenchmarkDataset& ds, const InstanceFeatureFn& features) {
  if (ds.train.empty() || ds.test.empty()) {
    throw ValidationError("nearest-centroid evaluation needs non-empty train and test splits");
  }
  std::vector<std::vector<double>> vectors(ds.instances.size());
  size_t width = 0;
  for (size_t i = 0; i < ds.instances.size(); ++i) {
    vectors[i] = SortedFlattenedFeatures(features(ds.instances[i].graph));
    width = std::max(width, vectors[i].size());
  }
  for (auto& v : vectors) v.resize(width, 0.0);

  std::array<std::vector<double>, 2> centroid{std::vector<double>(width, 0.0),
                                              std::vector<double>(width, 0.0)};
  std::array<int, 2> members{0, 0};
  for (int i : ds.train) {
    const int label = ds.instances[i].label;
    ++members[label];
    for (size_t f = 0; f < width; ++f) centroid[label][f] += vectors[i][f];
  }
  if (members[0] == 0 || members[1] == 0) {
    throw ValidationError("train split must contain both labels");
  }
  for (int label : {0, 1})
    for (double& x : centroid[label]) x /= members[label];

  auto distance2 = [&](const std::vector<double>& v, int label) {
    double s = 0.0;
    for (size_t f = 0; f < width; ++f) {
      const double d = v[f] - centroid[label][f];
      s += d * d;
    }
    return s;
  };
  int correct = 0;
  for (int i : ds.test) {
    const int predicted = distance2(vectors[i], 1) < distance2(vectors[i], 0) ? 1 : 0;
    correct += predicted == ds.instances[i].label;
  }
  return static_cast<double>(correct) / static_cast<double>(ds.test.size());
}

double NearestCentroidEval(const BenchmarkDataset& ds, const SpectralConfig& cfg) {
  return NearestCentroidEval(ds, SpectralFeatureFn(cfg));
}

}  // namespace wlspectra
