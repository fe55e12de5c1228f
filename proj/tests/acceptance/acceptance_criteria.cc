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
#include "acceptance_criteria.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "commands.h"
#include "json.hpp"
#include "random_graphs.h"
#include "wlspectra/graph.h"
#include "wlspectra/kwl.h"
#include "wlspectra/spectral.h"
#include "wlspectra/synthetic_benchmark.h"
#include "wlspectra/wl.h"

namespace wlspectra::acceptance {
namespace {

using Clock = std::chrono::steady_clock;
using testing::RandomGraph;
using testing::RandomPair;
using testing::RandomPermutation;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Round4(double x) { return std::round(x * 1e4) / 1e4; }

std::multiset<double> RoundedDiagonal(const Graph& g) {
  SpectralConfig cfg = SpectralConfig::Parse("(0,0,1,none)");
  const SpectralFeatures f = ComputeSpectralFeatures(g, cfg);
  std::multiset<double> out;
  for (int v = 0; v < f.num_vertices(); ++v) out.insert(Round4(f.at(v, 0)));
  return out;
}

std::multiset<double> Repeat(std::initializer_list<std::pair<double, int>> items) {
  std::multiset<double> out;
  for (auto [x, count] : items)
    for (int i = 0; i < count; ++i) out.insert(x);
  return out;
}

std::string Describe(const std::multiset<double>& values) {
  std::ostringstream os;
  std::map<double, int> counts;
  for (double x : values) ++counts[x];
  os << "{";
  bool first = true;
  for (auto [x, c] : counts) {
    os << (first ? "" : ", ") << x << "x" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------

CriterionResult GoldenHeatTable() {
  const auto start = Clock::now();
  const Graph decalin = MakeReferenceGraph(ReferenceGraph::kDecalin);
  const Graph bicyclopentyl = MakeReferenceGraph(ReferenceGraph::kBicyclopentyl);
  const auto d1 = RoundedDiagonal(decalin);
  const auto d2 = RoundedDiagonal(bicyclopentyl);
  const bool values_ok = d1 == Repeat({{0.1914, 2}, {0.2891, 4}, {0.3078, 4}}) &&
                         d2 == Repeat({{0.1929, 2}, {0.2910, 4}, {0.3098, 4}});

  const SpectralPreColoring spectral(SpectralConfig::Parse("(0,0,1,none)"));
  const Coloring joint = JointInitialColoring(decalin, bicyclopentyl, spectral);
  std::set<int> colors1(joint.colors().begin(), joint.colors().begin() + 10);
  std::set<int> colors2(joint.colors().begin() + 10, joint.colors().end());
  std::vector<int> shared;
  std::set_intersection(colors1.begin(), colors1.end(), colors2.begin(), colors2.end(),
                        std::back_inserter(shared));
  const bool disjoint = shared.empty() && joint.palette_size() == 6;
  const double secs = SecondsSince(start);
  return {1, "golden heat-kernel histogram table", values_ok && disjoint && secs < 1.0,
          "decalin " + Describe(d1) + ", bicyclopentyl " + Describe(d2) + ", joint palette " +
              std::to_string(joint.palette_size()) + (disjoint ? " (disjoint)" : " (overlap)"),
          secs};
}

CriterionResult OneWlBlindness() {
  const auto start = Clock::now();
  const JointRefinement r = JointRefine(MakeReferenceGraph(ReferenceGraph::kDecalin),
                                        MakeReferenceGraph(ReferenceGraph::kBicyclopentyl),
                                        ConstantPreColoring());
  const bool ok = r.first == r.second && ClassSizes(r.first) == std::vector<int>{2, 4, 4};
  const double secs = SecondsSince(start);
  return {2, "1-WL cannot separate decalin and bicyclopentyl", ok && secs < 1.0,
          "histograms " + HistogramToJson(r.first) + " vs " + HistogramToJson(r.second) +
              " after " + std::to_string(r.iterations) + " rounds",
          secs};
}

CriterionResult DegreeEqualsConstant() {
  const auto start = Clock::now();
  std::mt19937_64 rng(301);
  int matches = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const Graph g = RandomGraph(1, 12, rng);
    const Refinement a = RefineToConvergence(g, DegreePreColoring());
    const Refinement b = RefineToConvergence(g, ConstantPreColoring());
    matches += SamePartition(a.coloring, b.coloring);
  }
  return {3, "degree pre-coloring adds nothing over 1-WL", matches == trials,
          std::to_string(matches) + "/" + std::to_string(trials) + " identical final partitions",
          SecondsSince(start)};
}

// Permutation-equivariant channels for the monotonicity property.
std::vector<std::shared_ptr<const PreColoring>> EquivariantChannels() {
  std::vector<std::shared_ptr<const PreColoring>> out;
  out.push_back(std::make_shared<ConstantPreColoring>());
  out.push_back(std::make_shared<DegreePreColoring>());
  out.push_back(std::make_shared<FeaturePreColoring>("triangles", [](const Graph& g) {
    std::vector<std::vector<double>> rows(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      int t = 0;
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(v))
          if (a < b && g.has_edge(a, b)) ++t;
      rows[v] = {static_cast<double>(t)};
    }
    return rows;
  }));
  out.push_back(std::make_shared<FeaturePreColoring>("degree-parity", [](const Graph& g) {
    std::vector<std::vector<double>> rows(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) rows[v] = {double(g.degree(v) % 2)};
    return rows;
  }));
  out.push_back(std::make_shared<FeaturePreColoring>("distance-two", [](const Graph& g) {
    std::vector<std::vector<double>> rows(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::set<Vertex> two;
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(a))
          if (b != v && !g.has_edge(v, b)) two.insert(b);
      rows[v] = {static_cast<double>(two.size())};
    }
    return rows;
  }));
  for (const char* cfg : {"(-0.5,-0.5,1,none)", "(0,0,1,none)", "(-1,1,3,max)"}) {
    out.push_back(std::make_shared<SpectralPreColoring>(SpectralConfig::Parse(cfg)));
  }
  out.push_back(std::make_shared<DiagonalKwlPreColoring>(2));
  return out;
}

CriterionResult PreColoringMonotonicity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(401);
  const auto channels = EquivariantChannels();
  std::uniform_int_distribution<size_t> pick(0, channels.size() - 1);
  const int trials = 500;
  int holds = 0, r1_distinguishes = 0;
  for (int i = 0; i < trials; ++i) {
    auto [g1, g2] = RandomPair(2, 8, rng);
    std::shared_ptr<const PreColoring> r1 = channels[pick(rng)];
    if (rng() % 2) r1 = std::make_shared<ProductPreColoring>(
                       std::vector<std::shared_ptr<const PreColoring>>{r1, channels[pick(rng)]});
    const ProductPreColoring r2({r1, channels[pick(rng)]});
    const bool d1 = Distinguishable(g1, g2, *r1);
    const bool d2 = Distinguishable(g1, g2, r2);
    r1_distinguishes += d1;
    holds += !d1 || d2;
  }
  return {4, "refined equivariant pre-coloring is at least as expressive", holds == trials,
          std::to_string(holds) + "/" + std::to_string(trials) + " implications hold (" +
              std::to_string(r1_distinguishes) + " pairs separated by R1)",
          SecondsSince(start)};
}

// Pairs for the k-WL criteria: every non-isomorphic pair on 4 vertices
// (tagged k=2 only) plus 200 random pairs on 5-6 vertices.
struct KwlCorpus {
  std::vector<std::pair<Graph, Graph>> four_vertex;
  std::vector<std::pair<Graph, Graph>> random;
  int four_vertex_classes = 0;
};

const KwlCorpus& Corpus() {
  static const KwlCorpus corpus = [] {
    KwlCorpus c;
    const auto classes = testing::AllGraphsUpToIsomorphism(4);
    c.four_vertex_classes = static_cast<int>(classes.size());
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j)
        c.four_vertex.emplace_back(classes[i], classes[j]);
    std::mt19937_64 rng(501);
    for (int i = 0; i < 200; ++i) c.random.push_back(RandomPair(5, 6, rng));
    return c;
  }();
  return corpus;
}

CriterionResult DiagonalEquivalence() {
  const auto start = Clock::now();
  const KwlCorpus& corpus = Corpus();
  int checks = 0, holds = 0, full_equal = 0;
  auto check = [&](const Graph& a, const Graph& b, int k) {
    const DiagonalEquivalenceCheck c = CheckDiagonalEquivalence(a, b, k);
    ++checks;
    holds += c.holds();
    full_equal += c.full_histograms_equal;
  };
  for (const auto& [a, b] : corpus.four_vertex) check(a, b, 2);
  for (int k : {2, 3})
    for (const auto& [a, b] : corpus.random) check(a, b, k);
  const double secs = SecondsSince(start);
  const bool ok = corpus.four_vertex_classes == 11 && corpus.four_vertex.size() == 55 &&
                  holds == checks && secs < 300.0;
  return {5, "diagonal k-WL histograms agree with full tuple histograms", ok,
          std::to_string(holds) + "/" + std::to_string(checks) + " instances hold over " +
              std::to_string(corpus.four_vertex_classes) + " 4-vertex classes (" +
              std::to_string(full_equal) + " with equal full histograms)",
          secs};
}

CriterionResult KwlHierarchy() {
  const auto start = Clock::now();
  const KwlCorpus& corpus = Corpus();
  int pairs = 0, holds = 0, three_equal = 0;
  auto check = [&](const Graph& a, const Graph& b) {
    const auto [a3, b3] = KwlRefineToConvergence(a, b, 3);
    const auto [a2, b2] = KwlRefineToConvergence(a, b, 2);
    const bool eq3 = a3.Histogram() == b3.Histogram();
    const bool eq2 = a2.Histogram() == b2.Histogram();
    ++pairs;
    three_equal += eq3;
    holds += !eq3 || eq2;
  };
  for (const auto& [a, b] : corpus.four_vertex) check(a, b);
  for (const auto& [a, b] : corpus.random) check(a, b);
  return {6, "3-WL-equivalent pairs are 2-WL-equivalent", holds == pairs,
          std::to_string(holds) + "/" + std::to_string(pairs) + " implications hold (" +
              std::to_string(three_equal) + " pairs 3-WL-equivalent)",
          SecondsSince(start)};
}

CriterionResult SpectralInvariants() {
  const auto start = Clock::now();
  std::mt19937_64 rng(701);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> log_t(-2.0, 1.0);
  const int cases = 120;
  std::map<std::string, double> worst = {{"dirichlet", 0}, {"row_sum", 0}, {"identity", 0},
                                         {"semigroup", 0}, {"trace", 0},   {"equivariance", 0}};
  const std::map<std::string, double> tol = {{"dirichlet", 1e-9}, {"row_sum", 1e-8},
                                             {"identity", 1e-10}, {"semigroup", 1e-7},
                                             {"trace", 1e-8},     {"equivariance", 1e-8}};
  auto note = [&](const char* key, double err) { worst[key] = std::max(worst[key], err); };
  for (int c = 0; c < cases; ++c) {
    const Graph g = RandomGraph(2, 24, rng);
    const int n = g.num_vertices();
    const LaplacianMatrix lap(g);
    std::vector<double> x(n);
    for (double& xi : x) xi = unit(rng);
    double energy = 0.0;
    for (auto [u, v] : g.edges()) energy += (x[u] - x[v]) * (x[u] - x[v]);
    note("dirichlet", std::abs(lap.Quadratic(x) - energy));

    const Spectrum s = Decompose(lap);
    const double t1 = std::pow(10.0, log_t(rng)), t2 = std::pow(10.0, log_t(rng));
    const HeatKernel h1 = ComputeHeatKernel(s, t1);
    const HeatKernel h2 = ComputeHeatKernel(s, t2);
    const HeatKernel h12 = ComputeHeatKernel(s, t1 + t2);
    for (int u = 0; u < n; ++u) {
      double row = 0.0;
      for (int v = 0; v < n; ++v) row += h1.values(u, v);
      note("row_sum", std::abs(row - 1.0));
    }
    note("identity", ComputeHeatKernel(s, 0.0).values.MaxAbsDiff(DenseMatrix::Identity(n)));
    note("semigroup", h12.values.MaxAbsDiff(h1.values * h2.values));
    double trace = 0.0, expected = 0.0;
    for (int u = 0; u < n; ++u) trace += h1.values(u, u);
    for (double lambda : s.eigenvalues) expected += std::exp(-lambda * t1);
    note("trace", std::abs(trace - expected));

    const VertexPermutation sigma = RandomPermutation(n, rng);
    const HeatKernel hp = ComputeHeatKernel(Decompose(Permute(g, sigma)), t1);
    double err = 0.0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        err = std::max(err, std::abs(hp.values(sigma(u), sigma(v)) - h1.values(u, v)));
    note("equivariance", err);
  }
  bool ok = true;
  std::ostringstream detail;
  detail << cases << " cases;";
  for (const auto& [key, err] : worst) {
    ok = ok && err <= tol.at(key);
    detail << " " << key << "=" << err << (err <= tol.at(key) ? "" : "(!)");
  }
  return {7, "Laplacian and heat-kernel invariants", ok, detail.str(), SecondsSince(start)};
}

CriterionResult CospectralFixture() {
  const auto start = Clock::now();
  const CospectralPair pair = FindCospectralWlDistinguishable({.max_vertices = 9});
  const double search_secs = SecondsSince(start);
  const bool frozen = pair.first == MakeReferenceGraph(ReferenceGraph::kCospectralA) &&
                      pair.second == MakeReferenceGraph(ReferenceGraph::kCospectralB);
  const bool cospectral = Cospectral(pair.first, pair.second, 1e-8);
  const bool separated = Distinguishable(pair.first, pair.second, ConstantPreColoring());
  const bool non_isomorphic = !BruteForceIsomorphic(pair.first, pair.second);
  const bool ok = frozen && cospectral && separated && non_isomorphic && search_secs < 600.0;
  return {8, "cospectral but 1-WL-distinguishable fixture", ok,
          "n=" + std::to_string(pair.num_vertices) + ", " +
              std::to_string(pair.graphs_examined) + " graphs examined, frozen=" +
              (frozen ? "yes" : "no") + ", cospectral=" + (cospectral ? "yes" : "no") +
              ", 1-WL distinguishable=" + (separated ? "yes" : "no") +
              ", isomorphic=" + (non_isomorphic ? "no" : "yes"),
          SecondsSince(start)};
}

double DiagonalError(std::span<const double> exact, const SpectralFeatures& approx, int column) {
  double s = 0.0;
  for (size_t u = 0; u < exact.size(); ++u) {
    const double d = approx.at(static_cast<int>(u), column) - exact[u];
    s += d * d;
  }
  return std::sqrt(s);
}

// Pinned tolerances for the reduced-order criterion.
constexpr double kHalvingRatioTolerance = 0.05;   // |e(h/2)/e(h) - 1/2|
constexpr int kHalvingBaseSteps = 200;
constexpr int kHalvingRounds = 4;
constexpr int kTruncationSteps = 1000000;

CriterionResult ReducedOrderHeat() {
  const auto start = Clock::now();
  std::mt19937_64 rng(901);
  const int graphs = 20;
  int halving_ok = 0, monotone_ok = 0;
  double worst_ratio_dev = 0.0;
  for (int gi = 0; gi < graphs; ++gi) {
    std::uniform_int_distribution<int> size(5, 12);
    const Graph g = testing::RandomConnectedGraph(size(rng), 0.4, rng);
    const int n = g.num_vertices();
    const Spectrum s = Decompose(g);
    const auto exact = HeatKernelDiagonal(s, 1.0);

    SpectralConfig cfg = SpectralConfig::Parse("(0,0,1,none)");
    cfg.truncation = n;
    bool halves = true;
    double prev = DiagonalError(exact, ApproximateHeatDiagonal(s, cfg, kHalvingBaseSteps), 0);
    for (int r = 1; r <= kHalvingRounds; ++r) {
      const double err =
          DiagonalError(exact, ApproximateHeatDiagonal(s, cfg, kHalvingBaseSteps << r), 0);
      const double dev = std::abs(err / prev - 0.5);
      worst_ratio_dev = std::max(worst_ratio_dev, dev);
      halves = halves && dev <= kHalvingRatioTolerance;
      prev = err;
    }
    halving_ok += halves;

    bool monotone = true;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n; ++k) {
      cfg.truncation = k;
      const double err = DiagonalError(exact, ApproximateHeatDiagonal(s, cfg, kTruncationSteps), 0);
      monotone = monotone && err <= last;
      last = err;
    }
    monotone_ok += monotone;
  }
  std::ostringstream detail;
  detail << "step halving first-order on " << halving_ok << "/" << graphs
         << " graphs (worst |ratio-0.5|=" << worst_ratio_dev << "), truncation error monotone on "
         << monotone_ok << "/" << graphs;
  return {9, "reduced-order implicit Euler heat diagonal",
          halving_ok == graphs && monotone_ok == graphs, detail.str(), SecondsSince(start)};
}

// Diagnostic only: 1-nearest-neighbour accuracy on the same representation.
double OneNearestNeighbourAccuracy(const BenchmarkDataset& ds, const SpectralConfig& cfg) {
  std::vector<std::vector<double>> x;
  for (const auto& inst : ds.instances)
    x.push_back(SortedFlattenedFeatures(ComputeSpectralFeatures(inst.graph, cfg).Rows()));
  int correct = 0;
  for (int i : ds.test) {
    double best = std::numeric_limits<double>::infinity();
    int label = 0;
    for (int j : ds.train) {
      double d2 = 0.0;
      for (size_t f = 0; f < x[i].size(); ++f) d2 += (x[i][f] - x[j][f]) * (x[i][f] - x[j][f]);
      if (d2 < best) {
        best = d2;
        label = ds.instances[j].label;
      }
    }
    correct += label == ds.instances[i].label;
  }
  return static_cast<double>(correct) / static_cast<double>(ds.test.size());
}

CriterionResult BenchmarkSeparability() {
  const auto start = Clock::now();
  const Graph decalin = MakeReferenceGraph(ReferenceGraph::kDecalin);
  const Graph bicyclopentyl = MakeReferenceGraph(ReferenceGraph::kBicyclopentyl);
  const SpectralConfig cfg = SpectralConfig::Parse("(-1,1,10,none)");
  double spectral = 0.0, constant = 0.0;
  const int seeds = 10;
  for (int seed = 0; seed < seeds; ++seed) {
    const BenchmarkDataset ds = GenerateBenchmark(decalin, bicyclopentyl, 1000, 1000 + seed);
    spectral += NearestCentroidEval(ds, cfg);
    constant += NearestCentroidEval(ds, ConstantFeatureFn());
  }
  spectral /= seeds;
  constant /= seeds;
  const double secs = SecondsSince(start);
  const double one_nn = OneNearestNeighbourAccuracy(
      GenerateBenchmark(decalin, bicyclopentyl, 1000, 1000), cfg);
  std::ostringstream detail;
  detail << "mean test accuracy over " << seeds << " seeds: spectral " << spectral
         << " (>= 0.90), constant " << constant << " (<= 0.60); diagnostic 1-NN on seed 1000: "
         << one_nn;
  return {10, "nearest-centroid separability on the molecule benchmark",
          spectral >= 0.90 && constant <= 0.60 && secs < 120.0, detail.str(), secs};
}

std::string ReadAll(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative path -> bytes for every regular file below root.
std::map<std::string, std::string> Snapshot(const std::filesystem::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root))
    if (e.is_regular_file())
      out[std::filesystem::relative(e.path(), root).string()] = ReadAll(e.path());
  return out;
}

CriterionResult Determinism() {
  namespace fs = std::filesystem;
  const auto start = Clock::now();
  const fs::path root = fs::temp_directory_path() / ("wlspectra_determinism_" +
                                                     std::to_string(std::random_device{}()));
  fs::create_directories(root);
  bool ok = true;
  std::string detail;
  auto bench_stdout = [](cli::CommandOutput out) {
    auto j = nlohmann::json::parse(out.out);
    j.erase("out_dir");
    return std::make_pair(out.exit_code, j.dump());
  };
  for (const char* sources : {"molecules", "cospectral"}) {
    cli::BenchOptions o{sources, 1000, 20261014, (root / sources / "a").string()};
    const auto a = bench_stdout(cli::RunBench(o));
    o.out_dir = (root / sources / "b").string();
    const auto b = bench_stdout(cli::RunBench(o));
    const bool same = a.first == 0 && a == b &&
                      Snapshot(root / sources / "a") == Snapshot(root / sources / "b");
    ok = ok && same;
    detail += std::string("bench ") + sources + (same ? " identical" : " DIFFERS") + "; ";
  }

  // TU-format input with two graphs, plus a single-file input.
  fs::create_directories(root / "tu");
  std::ofstream(root / "tu" / "PAIR_A.txt") << "1, 2\n2, 1\n3, 4\n4, 3\n4, 5\n";
  std::ofstream(root / "tu" / "PAIR_graph_indicator.txt") << "1\n1\n2\n2\n2\n";
  std::vector<cli::FeaturesOptions> runs;
  runs.push_back({"ref:decalin", false, "(-1,1,5,MMM)", std::nullopt, 1000, "csv", ""});
  runs.push_back({(root / "tu").string(), true, "(-1,1,10,none)", std::nullopt, 1000, "json", ""});
  runs.push_back({"ref:bicyclopentyl", false, "(-1,1,10,none)", 4, 500, "csv", ""});
  for (const auto& o : runs) {
    const auto a = cli::RunFeatures(o);
    const auto b = cli::RunFeatures(o);
    const bool same = a.exit_code == 0 && a.out == b.out && !a.out.empty();
    ok = ok && same;
    detail += "features " + o.input.substr(o.input.find_last_of('/') + 1) +
              (same ? " identical" : " DIFFERS") + "; ";
  }
  fs::remove_all(root);
  return {11, "byte-identical bench and features output", ok, detail, SecondsSince(start)};
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string Report::ToJson() const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  auto items = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    items.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
  }
  j["criteria"] = std::move(items);
  return j.dump();
}

std::vector<Criterion> AllCriteria() {
  return {
      {1, "golden heat-kernel histogram table", GoldenHeatTable},
      {2, "1-WL blindness on the molecule pair", OneWlBlindness},
      {3, "degree pre-coloring equivalence", DegreeEqualsConstant},
      {4, "pre-coloring monotonicity", PreColoringMonotonicity},
      {5, "diagonal k-WL equivalence", DiagonalEquivalence},
      {6, "k-WL hierarchy", KwlHierarchy},
      {7, "spectral invariants", SpectralInvariants},
      {8, "cospectral fixture", CospectralFixture},
      {9, "reduced-order heat diagonal", ReducedOrderHeat},
      {10, "benchmark separability", BenchmarkSeparability},
      {11, "determinism", Determinism},
  };
}

Report RunAll(std::ostream& log) {
  Report report;
  for (const Criterion& c : AllCriteria()) {
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {c.id, c.name, false, std::string("exception: ") + e.what(), 0.0};
    }
    log << (r.passed ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.name << " ("
        << r.seconds << " s): " << r.detail << std::endl;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace wlspectra::acceptance
