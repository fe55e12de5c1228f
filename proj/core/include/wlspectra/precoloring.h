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
#ifndef WLSPECTRA_PRECOLORING_H_
#define WLSPECTRA_PRECOLORING_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wlspectra/coloring.h"
#include "wlspectra/graph.h"

namespace wlspectra {

// A vertex's initial color, as an ordered tuple of integers. Two vertices
// (possibly in different graphs) get the same initial color iff their keys
// are equal.
using ColorKey = std::vector<std::int64_t>;

// Number of decimal digits kept when real-valued channels become keys.
inline constexpr int kQuantizationDigits = 9;
std::int64_t QuantizeFeature(double value);

// Initial vertex coloring handed to 1-WL. Implementations must be
// permutation equivariant.
class PreColoring {
 public:
  virtual ~PreColoring() = default;

  virtual std::string name() const = 0;

  // Keys for a single graph.
  virtual std::vector<ColorKey> Keys(const Graph& g) const = 0;

  // Keys for several graphs drawn from one shared palette. The default
  // calls Keys() per graph, which is correct whenever a vertex's key depends
  // only on its own graph.
  virtual std::vector<std::vector<ColorKey>> JointKeys(std::span<const Graph> graphs) const;

  Coloring Apply(const Graph& g) const;
};

// C(v) = CONST.
class ConstantPreColoring final : public PreColoring {
 public:
  std::string name() const override { return "constant"; }
  std::vector<ColorKey> Keys(const Graph& g) const override;
};

// C(v) = |N(v)|.
class DegreePreColoring final : public PreColoring {
 public:
  std::string name() const override { return "degree"; }
  std::vector<ColorKey> Keys(const Graph& g) const override;
};

// User-supplied real-valued channels, one row per vertex, quantized to
// kQuantizationDigits decimals.
class FeaturePreColoring final : public PreColoring {
 public:
  using FeatureFn = std::function<std::vector<std::vector<double>>(const Graph&)>;

  FeaturePreColoring(std::string name, FeatureFn features)
      : name_(std::move(name)), features_(std::move(features)) {}

  std::string name() const override { return name_; }
  std::vector<ColorKey> Keys(const Graph& g) const override;

 private:
  std::string name_;
  FeatureFn features_;
};

// Concatenates the keys of several pre-colorings: (R1(v), R2(v), ...).
// The result refines every part.
class ProductPreColoring final : public PreColoring {
 public:
  explicit ProductPreColoring(std::vector<std::shared_ptr<const PreColoring>> parts);

  std::string name() const override;
  std::vector<ColorKey> Keys(const Graph& g) const override;
  std::vector<std::vector<ColorKey>> JointKeys(std::span<const Graph> graphs) const override;

 private:
  std::vector<std::shared_ptr<const PreColoring>> parts_;
};

}  // namespace wlspectra

#endif  // WLSPECTRA_PRECOLORING_H_
