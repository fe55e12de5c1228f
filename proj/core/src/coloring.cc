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
#include "wlspectra/coloring.h"

#include <algorithm>
#include <unordered_map>

#include "json.hpp"
#include "wlspectra/errors.h"

namespace wlspectra {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) return;
  const int max_color = *std::max_element(colors_.begin(), colors_.end());
  std::vector<bool> used(max_color + 1, false);
  for (int c : colors_) {
    if (c < 0) throw ValidationError("negative color id");
    used[c] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw ValidationError("color ids are not dense");
  }
  palette_size_ = max_color + 1;
}

Coloring Coloring::Constant(int n) { return Coloring(std::vector<int>(n, 0)); }

Coloring Coloring::Slice(int begin, int count) const {
  std::span<const int> part(colors_.data() + begin, count);
  return FromKeys(part);
}

ColorHistogram Histogram(std::span<const int> colors) {
  ColorHistogram h;
  for (int c : colors) ++h[c];
  return h;
}

std::vector<int> ClassSizes(const ColorHistogram& h) {
  std::vector<int> sizes;
  for (auto [color, count] : h) sizes.push_back(count);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool Refines(const Coloring& fine, const Coloring& coarse) {
  if (fine.size() != coarse.size()) {
    throw ValidationError("colorings cover different vertex sets");
  }
  std::unordered_map<int, int> coarse_of;
  for (int v = 0; v < fine.size(); ++v) {
    auto [it, inserted] = coarse_of.emplace(fine[v], coarse[v]);
    if (!inserted && it->second != coarse[v]) return false;
  }
  return true;
}

bool SamePartition(const Coloring& a, const Coloring& b) {
  return Refines(a, b) && Refines(b, a);
}

std::string ColoringToJson(const Coloring& c) {
  nlohmann::ordered_json j;
  j["colors"] = c.colors();
  j["palette_size"] = c.palette_size();
  return j.dump();
}

std::string HistogramToJson(const ColorHistogram& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto [color, count] : h) j[std::to_string(color)] = count;
  return j.dump();
}

}  // namespace wlspectra
