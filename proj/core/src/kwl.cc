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
#include "wlspectra/kwl.h"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "wlspectra/errors.h"

namespace wlspectra {
namespace {

int IntPow(int base, int exp) {
  int out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

void CheckGuards(std::span<const Graph> graphs, int k) {
  if (k < 2 || k > kKwlMaxArity) {
    throw CapabilityError("k-WL arity must be 2 or 3, got " + std::to_string(k));
  }
  for (const Graph& g : graphs) {
    if (g.num_vertices() > kKwlMaxVertices) {
      throw CapabilityError("k-WL is capped at " + std::to_string(kKwlMaxVertices) +
                            " vertices, got " + std::to_string(g.num_vertices()));
    }
  }
}

// Renames signatures drawn from all graphs to one dense, sorted palette.
KwlResult RenameJointly(std::span<const Graph> graphs, int k,
                        const std::vector<std::vector<std::vector<int>>>& signatures,
                        int iterations) {
  std::vector<const std::vector<int>*> all;
  for (const auto& per_graph : signatures)
    for (const auto& sig : per_graph) all.push_back(&sig);
  std::sort(all.begin(), all.end(), [](auto* a, auto* b) { return *a < *b; });
  all.erase(std::unique(all.begin(), all.end(), [](auto* a, auto* b) { return *a == *b; }),
            all.end());
  auto id_of = [&](const std::vector<int>& sig) {
    auto it = std::lower_bound(all.begin(), all.end(), &sig,
                               [](auto* a, auto* b) { return *a < *b; });
    return static_cast<int>(it - all.begin());
  };
  const int palette = static_cast<int>(all.size());
  KwlResult out;
  out.iterations = iterations;
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    std::vector<int> colors(signatures[gi].size());
    for (size_t t = 0; t < colors.size(); ++t) colors[t] = id_of(signatures[gi][t]);
    out.colorings.emplace_back(k, graphs[gi].num_vertices(), std::move(colors), palette);
  }
  return out;
}

}  // namespace

TupleColoring::TupleColoring(int arity, int num_vertices, std::vector<int> colors,
                             int palette_size)
    : arity_(arity),
      num_vertices_(num_vertices),
      colors_(std::move(colors)),
      palette_size_(palette_size) {
  if (static_cast<int>(colors_.size()) != IntPow(num_vertices, arity)) {
    throw ValidationError("tuple coloring must cover all n^k tuples");
  }
}

int TupleColoring::Index(std::span<const Vertex> tuple) const {
  int idx = 0;
  for (Vertex v : tuple) idx = idx * num_vertices_ + v;
  return idx;
}

std::vector<Vertex> TupleColoring::Tuple(int index) const {
  std::vector<Vertex> t(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    t[i] = index % num_vertices_;
    index /= num_vertices_;
  }
  return t;
}

int TupleColoring::DiagonalIndex(Vertex v) const {
  int idx = 0;
  for (int i = 0; i < arity_; ++i) idx = idx * num_vertices_ + v;
  return idx;
}

std::string TupleColoring::ToDebugJson() const {
  nlohmann::ordered_json j;
  j["k"] = arity_;
  j["n"] = num_vertices_;
  j["palette_size"] = palette_size_;
  auto tuples = nlohmann::ordered_json::array();
  for (int i = 0; i < num_tuples(); ++i) {
    tuples.push_back({{"t", Tuple(i)}, {"c", colors_[i]}});
  }
  j["tuples"] = std::move(tuples);
  return j.dump();
}

KwlResult KwlInitialize(std::span<const Graph> graphs, int k) {
  CheckGuards(graphs, k);
  std::vector<std::vector<std::vector<int>>> signatures(graphs.size());
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const int n = g.num_vertices();
    const int count = IntPow(n, k);
    signatures[gi].resize(count);
    std::vector<Vertex> t(k);
    for (int idx = 0; idx < count; ++idx) {
      for (int i = k - 1, rest = idx; i >= 0; --i, rest /= n) t[i] = rest % n;
      // One entry per position pair: 0 = distinct non-adjacent, 1 =
      // adjacent, 2 = same vertex. This is the ordered induced-subgraph type.
      auto& sig = signatures[gi][idx];
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          sig.push_back(t[i] == t[j] ? 2 : (g.has_edge(t[i], t[j]) ? 1 : 0));
    }
  }
  return RenameJointly(graphs, k, signatures, 0);
}

KwlResult KwlRefineStep(std::span<const Graph> graphs, const KwlResult& current) {
  const int k = current.colorings.front().arity();
  std::vector<std::vector<std::vector<int>>> signatures(graphs.size());
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const TupleColoring& tc = current.colorings[gi];
    const int n = tc.num_vertices();
    signatures[gi].resize(tc.num_tuples());
    for (int idx = 0; idx < tc.num_tuples(); ++idx) {
      auto& sig = signatures[gi][idx];
      sig.reserve(1 + k * n);
      sig.push_back(tc.colors()[idx]);
      // Position j carries weight n^(k-1-j) in the mixed-radix index.
      for (int j = 0, weight = IntPow(n, k - 1); j < k; ++j, weight /= n) {
        const int digit = (idx / weight) % n;
        const int base = idx - digit * weight;
        const auto start = sig.size();
        for (Vertex w = 0; w < n; ++w) sig.push_back(tc.colors()[base + w * weight]);
        std::sort(sig.begin() + start, sig.end());
      }
    }
  }
  return RenameJointly(graphs, k, signatures, current.iterations + 1);
}

KwlResult KwlRefineToConvergence(std::span<const Graph> graphs, int k) {
  KwlResult current = KwlInitialize(graphs, k);
  for (;;) {
    KwlResult next = KwlRefineStep(graphs, current);
    if (next.colorings.front().palette_size() == current.colorings.front().palette_size()) {
      break;
    }
    current = std::move(next);
  }
  return current;
}

std::pair<TupleColoring, TupleColoring> KwlInitialize(const Graph& g1, const Graph& g2,
                                                      int k) {
  const Graph both[] = {g1, g2};
  KwlResult r = KwlInitialize(both, k);
  return {std::move(r.colorings[0]), std::move(r.colorings[1])};
}

std::pair<TupleColoring, TupleColoring> KwlRefineToConvergence(const Graph& g1,
                                                               const Graph& g2, int k) {
  const Graph both[] = {g1, g2};
  KwlResult r = KwlRefineToConvergence(both, k);
  return {std::move(r.colorings[0]), std::move(r.colorings[1])};
}

std::vector<int> DiagonalColors(const TupleColoring& tc) {
  std::vector<int> out(tc.num_vertices());
  for (Vertex v = 0; v < tc.num_vertices(); ++v) out[v] = tc.colors()[tc.DiagonalIndex(v)];
  return out;
}

Coloring DiagonalColoring(const TupleColoring& tc) {
  const auto diag = DiagonalColors(tc);
  return Coloring::FromKeys(std::span<const int>(diag));
}

DiagonalEquivalenceCheck CheckDiagonalEquivalence(const Graph& g1, const Graph& g2, int k) {
  auto [c1, c2] = KwlRefineToConvergence(g1, g2, k);
  DiagonalEquivalenceCheck out;
  out.full_histograms_equal = c1.Histogram() == c2.Histogram();
  out.diagonal_histograms_equal =
      Histogram(DiagonalColors(c1)) == Histogram(DiagonalColors(c2));
  return out;
}

DiagonalKwlPreColoring::DiagonalKwlPreColoring(int k) : k_(k) {
  if (k < 2 || k > kKwlMaxArity) {
    throw CapabilityError("k-WL arity must be 2 or 3, got " + std::to_string(k));
  }
}

std::vector<ColorKey> DiagonalKwlPreColoring::Keys(const Graph& g) const {
  return JointKeys(std::span<const Graph>(&g, 1)).front();
}

std::vector<std::vector<ColorKey>> DiagonalKwlPreColoring::JointKeys(
    std::span<const Graph> graphs) const {
  const KwlResult r = KwlRefineToConvergence(graphs, k_);
  std::vector<std::vector<ColorKey>> out;
  for (const TupleColoring& tc : r.colorings) {
    std::vector<ColorKey> keys;
    for (int c : DiagonalColors(tc)) keys.push_back({c});
    out.push_back(std::move(keys));
  }
  return out;
}

}  // namespace wlspectra
