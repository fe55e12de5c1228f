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
#ifndef WLSPECTRA_COLORING_H_
#define WLSPECTRA_COLORING_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace wlspectra {

// Per-vertex color ids, dense in 0..palette_size-1.
class Coloring {
 public:
  Coloring() = default;
  // Throws ValidationError if the ids are negative or not dense.
  explicit Coloring(std::vector<int> colors);

  // All-zero coloring on n vertices.
  static Coloring Constant(int n);

  // Renames arbitrary comparable keys to dense ids in ascending key order.
  template <typename Key>
  static Coloring FromKeys(std::span<const Key> keys);

  int size() const { return static_cast<int>(colors_.size()); }
  int palette_size() const { return palette_size_; }
  int operator[](int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  // Restriction to vertices [begin, begin + count); the returned coloring
  // is re-densified.
  Coloring Slice(int begin, int count) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_size_ = 0;
};

// color id -> number of vertices carrying it. Only non-zero counts are kept.
using ColorHistogram = std::map<int, int>;

ColorHistogram Histogram(std::span<const int> colors);
inline ColorHistogram Histogram(const Coloring& c) { return Histogram(c.colors()); }

// Sorted class sizes, ignoring color names.
std::vector<int> ClassSizes(const ColorHistogram& h);

// True iff equal fine colors imply equal coarse colors.
bool Refines(const Coloring& fine, const Coloring& coarse);
// Same equivalence classes, regardless of naming.
bool SamePartition(const Coloring& a, const Coloring& b);

std::string ColoringToJson(const Coloring& c);
std::string HistogramToJson(const ColorHistogram& h);

// Implementation.

template <typename Key>
Coloring Coloring::FromKeys(std::span<const Key> keys) {
  std::vector<int> order(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> colors(keys.size());
  int next = -1;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i - 1]] < keys[order[i]]) ++next;
    colors[order[i]] = next;
  }
  return Coloring(std::move(colors));
}

}  // namespace wlspectra

#endif  // WLSPECTRA_COLORING_H_
