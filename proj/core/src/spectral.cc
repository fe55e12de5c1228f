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
#include "wlspectra/spectral.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"
#include "wlspectra/errors.h"

namespace wlspectra {

LaplacianMatrix::LaplacianMatrix(const Graph& g) : values_(g.num_vertices(), g.num_vertices()) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) values_(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    values_(u, v) = -1.0;
    values_(v, u) = -1.0;
  }
}

double LaplacianMatrix::Quadratic(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != size()) throw ValidationError("vector size mismatch");
  double s = 0.0;
  for (int i = 0; i < size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < size(); ++j) row += values_(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

Spectrum Decompose(const LaplacianMatrix& laplacian) {
  SymmetricEigen eig = JacobiEigen(laplacian.matrix());
  return Spectrum{std::move(eig.values), std::move(eig.vectors)};
}

HeatKernel ComputeHeatKernel(const Spectrum& spectrum, double t) {
  if (t < 0.0) throw ValidationError("heat kernel time must be non-negative");
  const int n = spectrum.size();
  const DenseMatrix& phi = spectrum.eigenvectors;
  std::vector<double> decay(n);
  for (int i = 0; i < n; ++i) decay[i] = std::exp(-spectrum.eigenvalues[i] * t);
  HeatKernel h{t, DenseMatrix(n, n)};
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += decay[i] * phi(u, i) * phi(v, i);
      h.values(u, v) = s;
      h.values(v, u) = s;
    }
  }
  return h;
}

std::vector<double> HeatKernelDiagonal(const Spectrum& spectrum, double t) {
  const int n = spectrum.size();
  std::vector<double> diag(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double decay = std::exp(-spectrum.eigenvalues[i] * t);
    for (int u = 0; u < n; ++u) {
      const double p = spectrum.eigenvectors(u, i);
      diag[u] += decay * p * p;
    }
  }
  return diag;
}

double QuantilePosition(Quantile q) {
  switch (q) {
    case Quantile::kMin:
      return 0.0;
    case Quantile::kMedian:
      return 0.5;
    case Quantile::kMax:
      return 1.0;
  }
  return 0.0;
}

double QuantileOfSorted(std::span<const double> sorted, double position) {
  if (sorted.empty()) return 0.0;
  const double rank = position * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<std::vector<double>> SpectralFeatures::Rows() const {
  std::vector<std::vector<double>> rows(num_vertices_);
  for (int v = 0; v < num_vertices_; ++v) rows[v].assign(row(v).begin(), row(v).end());
  return rows;
}

SpectralFeatures ComputeSpectralFeatures(const Spectrum& spectrum, const SpectralConfig& cfg) {
  cfg.Validate();
  const int n = spectrum.size();
  const auto times = cfg.TimeSamples();
  const int m = static_cast<int>(times.size());
  const int r = static_cast<int>(cfg.quantiles.size());
  SpectralFeatures out(n, cfg.FeatureDimension());
  std::vector<double> off_diagonal;
  for (int ti = 0; ti < m; ++ti) {
    if (r == 0) {
      const auto diag = HeatKernelDiagonal(spectrum, times[ti]);
      for (int u = 0; u < n; ++u) out.at(u, ti) = diag[u];
      continue;
    }
    const HeatKernel h = ComputeHeatKernel(spectrum, times[ti]);
    for (int u = 0; u < n; ++u) {
      out.at(u, ti) = h.values(u, u);
      off_diagonal.clear();
      for (int v = 0; v < n; ++v)
        if (v != u) off_diagonal.push_back(h.values(u, v));
      std::sort(off_diagonal.begin(), off_diagonal.end());
      for (int qi = 0; qi < r; ++qi) {
        out.at(u, m + ti * r + qi) =
            QuantileOfSorted(off_diagonal, QuantilePosition(cfg.quantiles[qi]));
      }
    }
  }
  return out;
}

SpectralFeatures ComputeSpectralFeatures(const Graph& g, const SpectralConfig& cfg) {
  cfg.Validate();
  return ComputeSpectralFeatures(Decompose(g), cfg);
}

SpectralPreColoring::SpectralPreColoring(SpectralConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.Validate();
}

std::vector<ColorKey> SpectralPreColoring::Keys(const Graph& g) const {
  const SpectralFeatures f = ComputeSpectralFeatures(g, cfg_);
  std::vector<ColorKey> keys(f.num_vertices());
  for (int v = 0; v < f.num_vertices(); ++v)
    for (double x : f.row(v)) keys[v].push_back(QuantizeFeature(x));
  return keys;
}

bool Cospectral(const Graph& g1, const Graph& g2, double tol) {
  if (g1.num_vertices() != g2.num_vertices()) {
    throw ValidationError("cospectrality needs graphs of equal size");
  }
  if (g1.num_edges() != g2.num_edges()) return false;  // trace(L) = 2|E|
  const Spectrum s1 = Decompose(g1);
  const Spectrum s2 = Decompose(g2);
  for (int i = 0; i < s1.size(); ++i)
    if (std::abs(s1.eigenvalues[i] - s2.eigenvalues[i]) > tol) return false;
  return true;
}

namespace {

void AppendNumber(std::string& out, double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, ptr);
}

}  // namespace

std::string FeaturesToCsv(std::span<const SpectralFeatures> per_graph) {
  std::string out = "graph_id,vertex_id";
  const int d = per_graph.empty() ? 0 : per_graph.front().dimension();
  for (int f = 0; f < d; ++f) out += ",f_" + std::to_string(f + 1);
  out += '\n';
  for (size_t gi = 0; gi < per_graph.size(); ++gi) {
    const SpectralFeatures& feats = per_graph[gi];
    for (int v = 0; v < feats.num_vertices(); ++v) {
      out += std::to_string(gi);
      out += ',';
      out += std::to_string(v);
      for (double x : feats.row(v)) {
        out += ',';
        AppendNumber(out, x);
      }
      out += '\n';
    }
  }
  return out;
}

std::string FeaturesToJson(std::span<const SpectralFeatures> per_graph) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (size_t gi = 0; gi < per_graph.size(); ++gi) {
    j.push_back({{"graph_id", gi}, {"features", per_graph[gi].Rows()}});
  }
  return j.dump();
}

std::string SpectrumToJson(const Spectrum& spectrum, bool include_eigenvectors) {
  nlohmann::ordered_json j;
  j["eigenvalues"] = spectrum.eigenvalues;
  if (include_eigenvectors) {
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < spectrum.eigenvectors.rows(); ++r) {
      auto row = spectrum.eigenvectors.row(r);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["eigenvectors"] = std::move(rows);
  }
  return j.dump();
}

}  // namespace wlspectra
