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
#include "wlspectra/precoloring.h"

#include <cmath>

#include "wlspectra/errors.h"

namespace wlspectra {

std::int64_t QuantizeFeature(double value) {
  static const double kScale = std::pow(10.0, kQuantizationDigits);
  return std::llround(value * kScale);
}

std::vector<std::vector<ColorKey>> PreColoring::JointKeys(
    std::span<const Graph> graphs) const {
  std::vector<std::vector<ColorKey>> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(Keys(g));
  return out;
}

Coloring PreColoring::Apply(const Graph& g) const {
  const auto keys = Keys(g);
  return Coloring::FromKeys(std::span<const ColorKey>(keys));
}

std::vector<ColorKey> ConstantPreColoring::Keys(const Graph& g) const {
  return std::vector<ColorKey>(g.num_vertices());
}

std::vector<ColorKey> DegreePreColoring::Keys(const Graph& g) const {
  std::vector<ColorKey> keys(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) keys[v] = {g.degree(v)};
  return keys;
}

std::vector<ColorKey> FeaturePreColoring::Keys(const Graph& g) const {
  const auto rows = features_(g);
  if (static_cast<int>(rows.size()) != g.num_vertices()) {
    throw ValidationError("feature channel '" + name_ + "' returned " +
                          std::to_string(rows.size()) + " rows for " +
                          std::to_string(g.num_vertices()) + " vertices");
  }
  std::vector<ColorKey> keys(rows.size());
  for (size_t v = 0; v < rows.size(); ++v) {
    keys[v].reserve(rows[v].size());
    for (double x : rows[v]) keys[v].push_back(QuantizeFeature(x));
  }
  return keys;
}

ProductPreColoring::ProductPreColoring(std::vector<std::shared_ptr<const PreColoring>> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("product of zero pre-colorings");
}

std::string ProductPreColoring::name() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i]->name();
  }
  return out + ")";
}

namespace {

// Prefixing each part with its length keeps the concatenation unambiguous.
void AppendPart(ColorKey& dst, const ColorKey& part) {
  dst.push_back(static_cast<std::int64_t>(part.size()));
  dst.insert(dst.end(), part.begin(), part.end());
}

}  // namespace

std::vector<ColorKey> ProductPreColoring::Keys(const Graph& g) const {
  std::vector<ColorKey> out(g.num_vertices());
  for (const auto& part : parts_) {
    const auto keys = part->Keys(g);
    for (size_t v = 0; v < out.size(); ++v) AppendPart(out[v], keys[v]);
  }
  return out;
}

std::vector<std::vector<ColorKey>> ProductPreColoring::JointKeys(
    std::span<const Graph> graphs) const {
  std::vector<std::vector<ColorKey>> out(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) out[i].resize(graphs[i].num_vertices());
  for (const auto& part : parts_) {
    const auto keys = part->JointKeys(graphs);
    for (size_t i = 0; i < graphs.size(); ++i)
      for (size_t v = 0; v < out[i].size(); ++v) AppendPart(out[i][v], keys[i][v]);
  }
  return out;
}

}  // namespace wlspectra
