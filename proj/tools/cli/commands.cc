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
#include "commands.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wlspectra/errors.h"
#include "wlspectra/kwl.h"
#include "wlspectra/spectral.h"
#include "wlspectra/synthetic_benchmark.h"
#include "wlspectra/wl.h"

namespace wlspectra::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

ordered_json HistogramJson(const ColorHistogram& h) {
  ordered_json j = ordered_json::object();
  for (auto [color, count] : h) j[std::to_string(color)] = count;
  return j;
}

std::unique_ptr<PreColoring> MakePreColoring(const WlOptions& o) {
  if (o.pre == "constant") return std::make_unique<ConstantPreColoring>();
  if (o.pre == "degree") return std::make_unique<DegreePreColoring>();
  if (o.pre == "spectral") {
    return std::make_unique<SpectralPreColoring>(SpectralConfig::Parse(o.spectral_cfg));
  }
  if (o.pre == "diag-kwl") return std::make_unique<DiagonalKwlPreColoring>(o.k);
  throw ValidationError("unknown pre-coloring '" + o.pre + "'");
}

CommandOutput Failure(const std::exception& e) {
  CommandOutput out;
  out.exit_code = kExitError;
  out.err = std::string("error: ") + e.what() + "\n";
  return out;
}

// Locates "<DS>_A.txt" and "<DS>_graph_indicator.txt" in a directory.
std::pair<fs::path, fs::path> FindTuFiles(const fs::path& dir) {
  fs::path adjacency, indicator;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.ends_with("_A.txt")) adjacency = entry.path();
    if (name.ends_with("_graph_indicator.txt")) indicator = entry.path();
  }
  if (adjacency.empty() || indicator.empty()) {
    throw ParseError("TU directory " + dir.string() +
                     " needs *_A.txt and *_graph_indicator.txt");
  }
  return {adjacency, indicator};
}

std::string Hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

Graph LoadGraph(const std::string& source) {
  if (source.starts_with("ref:")) {
    return MakeReferenceGraph(ParseReferenceGraphName(source.substr(4)));
  }
  return ParseEdgeList(ReadFile(source));
}

CommandOutput RunWl(const WlOptions& options) {
  try {
    const auto pre = MakePreColoring(options);
    const Graph g1 = LoadGraph(options.first);
    const Graph g2 = LoadGraph(options.second);
    const JointRefinement r = JointRefine(g1, g2, *pre);
    const bool distinguishable = r.first != r.second;
    ordered_json j;
    j["pre"] = pre->name();
    j["distinguishable"] = distinguishable;
    j["iterations"] = r.iterations;
    j["histograms"] = {HistogramJson(r.first), HistogramJson(r.second)};
    return {distinguishable ? kExitDistinguishable : kExitOk, j.dump() + "\n", ""};
  } catch (const std::exception& e) {
    return Failure(e);
  }
}

CommandOutput RunFeatures(const FeaturesOptions& options) {
  try {
    SpectralConfig cfg = SpectralConfig::Parse(options.spectral_cfg);
    cfg.truncation = options.truncation;
    cfg.Validate();
    if (options.format != "csv" && options.format != "json") {
      throw ValidationError("output format must be csv or json");
    }
    if (cfg.truncation && !cfg.quantiles.empty()) {
      throw ValidationError("--truncation produces diagonal features only; use quantiles none");
    }
    std::vector<Graph> graphs;
    if (options.tu_directory) {
      const auto [adjacency, indicator] = FindTuFiles(options.input);
      graphs = ParseTuDataset(ReadFile(adjacency), ReadFile(indicator));
    } else {
      graphs.push_back(LoadGraph(options.input));
    }
    std::vector<SpectralFeatures> features;
    features.reserve(graphs.size());
    for (const Graph& g : graphs) {
      cfg.ValidateFor(g);
      features.push_back(cfg.truncation ? ApproximateHeatDiagonal(g, cfg, options.steps)
                                        : ComputeSpectralFeatures(g, cfg));
    }
    std::string content =
        options.format == "csv" ? FeaturesToCsv(features) : FeaturesToJson(features) + "\n";
    CommandOutput out;
    if (options.output.empty()) {
      out.out = std::move(content);
    } else {
      WriteFile(options.output, content);
      ordered_json j;
      j["output"] = options.output;
      j["graphs"] = graphs.size();
      j["dimension"] = features.empty() ? 0 : features.front().dimension();
      out.out = j.dump() + "\n";
    }
    return out;
  } catch (const std::exception& e) {
    return Failure(e);
  }
}

std::vector<std::string> BenchConfigurations() {
  return {"(-1,1,10,none)", "(-1,1,5,max)"};
}

CommandOutput RunBench(const BenchOptions& options) {
  try {
    std::pair<Graph, Graph> sources;
    if (options.sources == "molecules") {
      sources = {MakeReferenceGraph(ReferenceGraph::kDecalin),
                 MakeReferenceGraph(ReferenceGraph::kBicyclopentyl)};
    } else if (options.sources == "cospectral") {
      CospectralPair pair = FindCospectralWlDistinguishable();
      sources = {std::move(pair.first), std::move(pair.second)};
    } else {
      throw ValidationError("--sources must be molecules or cospectral");
    }
    const BenchmarkDataset ds =
        GenerateBenchmark(sources.first, sources.second, options.count, options.seed);
    if (!options.out_dir.empty()) WriteDataset(ds, options.out_dir);

    ordered_json j;
    j["sources"] = options.sources;
    j["count"] = options.count;
    j["seed"] = options.seed;
    j["manifest_fnv1a64"] = Hex64(Fnv1a64(DatasetManifestJson(ds)));
    j["train_size"] = ds.train.size();
    j["test_size"] = ds.test.size();
    auto results = ordered_json::array();
    for (const std::string& cfg : BenchConfigurations()) {
      results.push_back(
          {{"config", cfg}, {"accuracy", NearestCentroidEval(ds, SpectralConfig::Parse(cfg))}});
    }
    results.push_back(
        {{"config", "constant"}, {"accuracy", NearestCentroidEval(ds, ConstantFeatureFn())}});
    j["results"] = std::move(results);
    if (!options.out_dir.empty()) j["out_dir"] = options.out_dir;
    return {kExitOk, j.dump() + "\n", ""};
  } catch (const std::exception& e) {
    return Failure(e);
  }
}

CommandOutput RunSpectrum(const SpectrumOptions& options) {
  try {
    const Spectrum s = Decompose(LoadGraph(options.input));
    return {kExitOk, SpectrumToJson(s, options.eigenvectors) + "\n", ""};
  } catch (const std::exception& e) {
    return Failure(e);
  }
}

std::uint64_t SeedFromEnvironment(std::uint64_t fallback) {
  const char* env = std::getenv("WLSPECTRA_SEED");
  if (env == nullptr) return fallback;
  std::uint64_t seed = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, seed);
  return ec == std::errc() && ptr == end ? seed : fallback;
}

}  // namespace wlspectra::cli
