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
#ifndef WLSPECTRA_SPECTRAL_H_
#define WLSPECTRA_SPECTRAL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wlspectra/graph.h"
#include "wlspectra/matrix.h"
#include "wlspectra/precoloring.h"

namespace wlspectra {

// L = D - A of a simple graph.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const Graph& g);

  int size() const { return values_.rows(); }
  const DenseMatrix& matrix() const { return values_; }
  double operator()(int r, int c) const { return values_(r, c); }

  // x^T L x.
  double Quadratic(std::span<const double> x) const;

 private:
  DenseMatrix values_;
};

// Full eigendecomposition L = Phi Lambda Phi^T, eigenvalues ascending.
struct Spectrum {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;  // orthonormal columns

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

Spectrum Decompose(const LaplacianMatrix& laplacian);
inline Spectrum Decompose(const Graph& g) { return Decompose(LaplacianMatrix(g)); }

// H_t = Phi exp(-t Lambda) Phi^T.
struct HeatKernel {
  double t = 0.0;
  DenseMatrix values;
};

HeatKernel ComputeHeatKernel(const Spectrum& spectrum, double t);

// Only the diagonal of H_t, without forming the full matrix.
std::vector<double> HeatKernelDiagonal(const Spectrum& spectrum, double t);

enum class Quantile { kMin, kMedian, kMax };

// Quantile positions in [0, 1].
double QuantilePosition(Quantile q);

// Linear interpolation between order statistics of an ascending range.
double QuantileOfSorted(std::span<const double> sorted, double position);

// Heat-kernel sampling parameters, written "(a,b,m,q)": times are m
// log-spaced samples between 10^a and 10^b, and q is one of none, max, MMM
// (min, median, max).
struct SpectralConfig {
  double t_min_exp = 0.0;
  double t_max_exp = 0.0;
  int samples = 1;
  std::vector<Quantile> quantiles;  // ascending
  std::optional<int> truncation;    // eigenpairs kept by the reduced-order path

  static SpectralConfig Parse(std::string_view text);
  std::string ToString() const;

  // Throws ValidationError when samples < 1 or t_min_exp > t_max_exp.
  void Validate() const;
  // As Validate(), plus truncation <= num_vertices when set.
  void ValidateFor(const Graph& g) const;

  std::vector<double> TimeSamples() const;
  int FeatureDimension() const {
    return samples * (1 + static_cast<int>(quantiles.size()));
  }
};

// Per-vertex real feature rows of equal length.
class SpectralFeatures {
 public:
  SpectralFeatures() = default;
  SpectralFeatures(int num_vertices, int dimension)
      : num_vertices_(num_vertices),
        dimension_(dimension),
        values_(static_cast<size_t>(num_vertices) * dimension, 0.0) {}

  int num_vertices() const { return num_vertices_; }
  int dimension() const { return dimension_; }

  double& at(int v, int f) { return values_[static_cast<size_t>(v) * dimension_ + f]; }
  double at(int v, int f) const { return values_[static_cast<size_t>(v) * dimension_ + f]; }
  std::span<const double> row(int v) const {
    return {values_.data() + static_cast<size_t>(v) * dimension_,
            static_cast<size_t>(dimension_)};
  }
  std::vector<std::vector<double>> Rows() const;

 private:
  int num_vertices_ = 0;
  int dimension_ = 0;
  std::vector<double> values_;
};

// Layout per vertex u: [H_t1(u,u), ..., H_tm(u,u)] followed, for each time
// sample in order, by the configured quantiles of row u of H_t with the
// diagonal entry removed. The truncation field is ignored here.
SpectralFeatures ComputeSpectralFeatures(const Graph& g, const SpectralConfig& cfg);
SpectralFeatures ComputeSpectralFeatures(const Spectrum& spectrum, const SpectralConfig& cfg);

// Reduced-order heat diagonal: keep the cfg.truncation smallest eigenpairs,
// project each unit impulse e_u onto them and integrate w' + Lambda w = 0
// with 'steps' implicit Euler steps up to each sample time. Returns only
// the m diagonal columns. Requires cfg.truncation and empty quantiles.
SpectralFeatures ApproximateHeatDiagonal(const Graph& g, const SpectralConfig& cfg, int steps);
SpectralFeatures ApproximateHeatDiagonal(const Spectrum& spectrum, const SpectralConfig& cfg,
                                         int steps);

// Spectral WL pre-coloring: quantized feature rows.
class SpectralPreColoring final : public PreColoring {
 public:
  explicit SpectralPreColoring(SpectralConfig cfg);

  std::string name() const override { return "spectral" + cfg_.ToString(); }
  std::vector<ColorKey> Keys(const Graph& g) const override;

  const SpectralConfig& config() const { return cfg_; }

 private:
  SpectralConfig cfg_;
};

// Sorted Laplacian eigenvalues agree entrywise within tol. Throws
// ValidationError when the vertex counts differ.
bool Cospectral(const Graph& g1, const Graph& g2, double tol = 1e-8);

// ---- export --------------------------------------------------------------

// One row per vertex: graph_id,vertex_id,f_1..f_d. Numbers use the shortest
// round-trip representation.
std::string FeaturesToCsv(std::span<const SpectralFeatures> per_graph);
// [{"graph_id":0,"features":[[...],...]},...]
std::string FeaturesToJson(std::span<const SpectralFeatures> per_graph);
// {"eigenvalues":[...]} plus "eigenvectors" (row-major rows) on request.
std::string SpectrumToJson(const Spectrum& spectrum, bool include_eigenvectors);

}  // namespace wlspectra

#endif  // WLSPECTRA_SPECTRAL_H_
