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
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>

#include "json.hpp"
#include "wlspectra/errors.h"
#include "wlspectra/synthetic_benchmark.h"

namespace wlspectra {

Graph RecoverSource(const BenchmarkInstance& instance) {
  const Graph perturbed = Permute(instance.graph, instance.permutation.Inverse());
  return instance.perturbation.kind == Perturbation::Kind::kAdd
             ? WithEdgeRemoved(perturbed, instance.perturbation.edge)
             : WithEdgeAdded(perturbed, instance.perturbation.edge);
}

namespace {

std::vector<Edge> AbsentEdges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

BenchmarkInstance Perturb(const Graph& source, int label, std::mt19937_64& rng) {
  const auto absent = AbsentEdges(source);
  // Adding the last absent edge would make the graph complete; removing the
  // last edge would leave it edgeless.
  const bool can_add = absent.size() >= 2;
  const bool can_remove = source.num_edges() >= 2;
  if (!can_add && !can_remove) {
    throw ValidationError("source graph admits no valid single-edge perturbation");
  }
  std::uniform_int_distribution<int> coin(0, 1);
  Perturbation p;
  for (;;) {
    p.kind = coin(rng) == 0 ? Perturbation::Kind::kAdd : Perturbation::Kind::kRemove;
    if (p.kind == Perturbation::Kind::kAdd ? can_add : can_remove) break;
  }
  const auto& pool = p.kind == Perturbation::Kind::kAdd ? absent : source.edges();
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  p.edge = pool[pick(rng)];
  const Graph perturbed = p.kind == Perturbation::Kind::kAdd ? WithEdgeAdded(source, p.edge)
                                                             : WithEdgeRemoved(source, p.edge);
  std::vector<Vertex> mapping(source.num_vertices());
  std::iota(mapping.begin(), mapping.end(), 0);
  std::shuffle(mapping.begin(), mapping.end(), rng);
  VertexPermutation sigma(std::move(mapping));
  return BenchmarkInstance{Permute(perturbed, sigma), label, p, std::move(sigma)};
}

// If 'lacking' has no instance of 'label' and both splits hold at least two
// entries, swaps one 'label' instance from 'other' into 'lacking'. Every
// member of 'lacking' carries the other label, so it keeps at least one.
void EnsureLabelPresent(std::vector<int>& lacking, std::vector<int>& other, int label,
                        const std::vector<BenchmarkInstance>& instances) {
  auto is_label = [&](int i) { return instances[i].label == label; };
  if (lacking.size() < 2 || std::any_of(lacking.begin(), lacking.end(), is_label)) return;
  if (std::count_if(other.begin(), other.end(), is_label) < 2) return;
  std::swap(*std::find_if(other.begin(), other.end(), is_label), lacking.front());
}

}  // namespace

BenchmarkDataset GenerateBenchmark(const Graph& g0, const Graph& g1, int count,
                                   std::uint64_t seed) {
  if (count < 2) throw ValidationError("benchmark needs at least 2 instances");
  BenchmarkDataset ds;
  ds.sources = {g0, g1};
  ds.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  ds.instances.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int label = coin(rng);
    ds.instances.push_back(Perturb(ds.sources[label], label, rng));
  }

  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int test_size = std::max(1, static_cast<int>(std::lround(count / 10.0)));
  ds.test.assign(order.begin(), order.begin() + test_size);
  ds.train.assign(order.begin() + test_size, order.end());
  for (int label : {0, 1}) {
    EnsureLabelPresent(ds.test, ds.train, label, ds.instances);
    EnsureLabelPresent(ds.train, ds.test, label, ds.instances);
  }
  std::sort(ds.train.begin(), ds.train.end());
  std::sort(ds.test.begin(), ds.test.end());
  return ds;
}

namespace {

std::string InstanceFileName(int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "instance_%05d.edges", i);
  return buf;
}

}  // namespace

std::string DatasetManifestJson(const BenchmarkDataset& ds) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["seed"] = ds.seed;
  j["count"] = ds.instances.size();
  j["sources"] = {ToEdgeList(ds.sources[0]), ToEdgeList(ds.sources[1])};
  j["split"] = {{"ratio", "9:1"}, {"train", ds.train}, {"test", ds.test}};
  auto instances = ordered_json::array();
  for (size_t i = 0; i < ds.instances.size(); ++i) {
    const auto& inst = ds.instances[i];
    instances.push_back(
        {{"file", "instances/" + InstanceFileName(static_cast<int>(i))},
         {"label", inst.label},
         {"perturbation",
          {{"op", inst.perturbation.kind == Perturbation::Kind::kAdd ? "add" : "remove"},
           {"edge", {inst.perturbation.edge.first, inst.perturbation.edge.second}}}},
         {"permutation", inst.permutation.mapping()}});
  }
  j["instances"] = std::move(instances);
  return j.dump(1) + "\n";
}

std::string DatasetLabelsCsv(const BenchmarkDataset& ds) {
  std::vector<const char*> split(ds.instances.size(), "train");
  for (int i : ds.test) split[i] = "test";
  std::string out = "instance,label,split\n";
  for (size_t i = 0; i < ds.instances.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(ds.instances[i].label) + "," + split[i] +
           "\n";
  }
  return out;
}

void WriteDataset(const BenchmarkDataset& ds, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "instances");
  auto write = [](const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
  };
  write(dir / "manifest.json", DatasetManifestJson(ds));
  write(dir / "labels.csv", DatasetLabelsCsv(ds));
  for (size_t i = 0; i < ds.instances.size(); ++i) {
    write(dir / "instances" / InstanceFileName(static_cast<int>(i)),
          ToEdgeList(ds.instances[i].graph));
  }
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace wlspectra
