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
// Reduced-order heat diagonal on the truncated eigenbasis.

#include <cmath>
#include <string>

#include "wlspectra/errors.h"
#include "wlspectra/spectral.h"

namespace wlspectra {

SpectralFeatures ApproximateHeatDiagonal(const Spectrum& spectrum, const SpectralConfig& cfg,
                                         int steps) {
  cfg.Validate();
  if (!cfg.truncation) throw ValidationError("reduced-order heat diagonal needs a truncation");
  if (!cfg.quantiles.empty()) {
    throw ValidationError("reduced-order heat diagonal does not produce quantiles");
  }
  if (steps < 1) throw ValidationError("implicit Euler needs at least one step");
  const int n = spectrum.size();
  const int k = *cfg.truncation;
  if (k > n) {
    throw ValidationError("truncation " + std::to_string(k) + " exceeds vertex count " +
                          std::to_string(n));
  }
  const auto times = cfg.TimeSamples();
  SpectralFeatures out(n, static_cast<int>(times.size()));
  std::vector<double> gain(k);
  for (size_t ti = 0; ti < times.size(); ++ti) {
    const double h = times[ti] / steps;
    // The reduced system is diagonal, so each implicit Euler step
    // (I + h Lambda_k) w_{s+1} = w_s scales mode i by 1 / (1 + h lambda_i).
    for (int i = 0; i < k; ++i) {
      gain[i] = std::pow(1.0 + h * spectrum.eigenvalues[i], -steps);
    }
    // With w(0) = Phi_k^T e_u, the heat left at u is e_u^T Phi_k w(t).
    for (int u = 0; u < n; ++u) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) {
        const double p = spectrum.eigenvectors(u, i);
        s += gain[i] * p * p;
      }
      out.at(u, static_cast<int>(ti)) = s;
    }
  }
  return out;
}

SpectralFeatures ApproximateHeatDiagonal(const Graph& g, const SpectralConfig& cfg, int steps) {
  cfg.ValidateFor(g);
  return ApproximateHeatDiagonal(Decompose(g), cfg, steps);
}

}  // namespace wlspectra
