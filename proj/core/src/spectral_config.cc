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
#include <charconv>
#include <cmath>
#include <string>

#include "wlspectra/errors.h"
#include "wlspectra/spectral.h"

namespace wlspectra {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::string FormatNumber(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

SpectralConfig SpectralConfig::Parse(std::string_view text) {
  const std::string original(text);
  text = Trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("spectral config must look like (a,b,m,q), got '" + original + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string_view> fields;
  for (size_t start = 0;;) {
    const auto comma = text.find(',', start);
    fields.push_back(Trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 4) {
    throw ParseError("spectral config needs 4 fields, got '" + original + "'");
  }
  auto parse_double = [&](std::string_view f) {
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), x);
    if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(x)) {
      throw ParseError("bad number '" + std::string(f) + "' in spectral config");
    }
    return x;
  };
  SpectralConfig cfg;
  cfg.t_min_exp = parse_double(fields[0]);
  cfg.t_max_exp = parse_double(fields[1]);
  {
    int m = 0;
    auto f = fields[2];
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), m);
    if (ec != std::errc() || ptr != f.data() + f.size()) {
      throw ParseError("bad sample count '" + std::string(f) + "' in spectral config");
    }
    cfg.samples = m;
  }
  const auto q = fields[3];
  if (q == "none") {
  } else if (q == "max") {
    cfg.quantiles = {Quantile::kMax};
  } else if (q == "MMM" || q == "mmm") {
    cfg.quantiles = {Quantile::kMin, Quantile::kMedian, Quantile::kMax};
  } else {
    throw ParseError("quantile set must be none, max or MMM, got '" + std::string(q) + "'");
  }
  cfg.Validate();
  return cfg;
}

std::string SpectralConfig::ToString() const {
  std::string q = "none";
  if (quantiles.size() == 1 && quantiles[0] == Quantile::kMax) {
    q = "max";
  } else if (quantiles.size() == 3) {
    q = "MMM";
  } else if (!quantiles.empty()) {
    q = "custom";
  }
  return "(" + FormatNumber(t_min_exp) + "," + FormatNumber(t_max_exp) + "," +
         std::to_string(samples) + "," + q + ")";
}

void SpectralConfig::Validate() const {
  if (samples < 1) throw ValidationError("spectral config needs at least one time sample");
  if (t_min_exp > t_max_exp) {
    throw ValidationError("spectral config start exponent exceeds end exponent");
  }
  if (truncation && *truncation < 1) throw ValidationError("truncation must be >= 1");
}

void SpectralConfig::ValidateFor(const Graph& g) const {
  Validate();
  if (truncation && *truncation > g.num_vertices()) {
    throw ValidationError("truncation " + std::to_string(*truncation) +
                          " exceeds vertex count " + std::to_string(g.num_vertices()));
  }
}

std::vector<double> SpectralConfig::TimeSamples() const {
  std::vector<double> times(samples);
  if (samples == 1) {
    times[0] = std::pow(10.0, t_min_exp);
    return times;
  }
  const double step = (t_max_exp - t_min_exp) / (samples - 1);
  for (int i = 0; i < samples; ++i) times[i] = std::pow(10.0, t_min_exp + i * step);
  return times;
}

}  // namespace wlspectra
