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
// wlspectra: WL and heat-kernel graph invariants from the command line.
//
//   wlspectra wl <g1> <g2> [--pre constant|degree|spectral|diag-kwl]
//   wlspectra features <input> [--tu] [--spectral-cfg "(a,b,m,q)"] [--truncation k]
//   wlspectra bench [--sources molecules|cospectral] [--count N] [--seed S] [--out DIR]
//   wlspectra spectrum <input> [--eigenvectors]
//   wlspectra selftest
//
// Graph arguments are edge-list files or built-ins such as ref:decalin.
// Exit codes: 0 success (wl: indistinguishable), 1 wl: distinguishable,
// 2 error.

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "acceptance_criteria.h"
#include "commands.h"

namespace {

int Emit(const wlspectra::cli::CommandOutput& out) {
  std::fwrite(out.out.data(), 1, out.out.size(), stdout);
  std::fwrite(out.err.data(), 1, out.err.size(), stderr);
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wlspectra::cli;
  CLI::App app{"Weisfeiler-Leman and heat-kernel graph invariants"};
  app.require_subcommand(1);

  WlOptions wl;
  auto* wl_cmd = app.add_subcommand("wl", "1-WL distinguishability verdict for two graphs");
  wl_cmd->add_option("g1", wl.first, "first graph")->required();
  wl_cmd->add_option("g2", wl.second, "second graph")->required();
  wl_cmd->add_option("--pre", wl.pre, "pre-coloring")
      ->check(CLI::IsMember({"constant", "degree", "spectral", "diag-kwl"}));
  wl_cmd->add_option("--spectral-cfg", wl.spectral_cfg, "spectral config (a,b,m,q)");
  wl_cmd->add_option("--k", wl.k, "k-WL arity for diag-kwl")->check(CLI::Range(2, 3));

  FeaturesOptions features;
  std::optional<int> truncation;
  auto* features_cmd = app.add_subcommand("features", "export heat-kernel node features");
  features_cmd->add_option("input", features.input, "graph file, ref:<name> or TU directory")
      ->required();
  features_cmd->add_flag("--tu", features.tu_directory, "input is a TU dataset directory");
  features_cmd->add_option("--spectral-cfg", features.spectral_cfg, "spectral config (a,b,m,q)");
  features_cmd->add_option("--truncation", truncation, "keep k smallest eigenpairs (reduced order)");
  features_cmd->add_option("--steps", features.steps, "implicit Euler steps for --truncation")
      ->check(CLI::PositiveNumber);
  features_cmd->add_option("--out", features.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  features_cmd->add_option("-o,--output", features.output, "write to file instead of stdout");

  BenchOptions bench;
  std::optional<std::uint64_t> seed;
  auto* bench_cmd = app.add_subcommand("bench", "generate a perturbed-pair benchmark");
  bench_cmd->add_option("--sources", bench.sources, "source pair")
      ->check(CLI::IsMember({"molecules", "cospectral"}));
  bench_cmd->add_option("--count", bench.count, "number of instances")->check(CLI::Range(2, 1000000));
  bench_cmd->add_option("--seed", seed, "RNG seed (falls back to WLSPECTRA_SEED, then 0)");
  bench_cmd->add_option("--out", bench.out_dir, "dataset output directory");

  SpectrumOptions spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum as JSON");
  spectrum_cmd->add_option("input", spectrum.input, "graph file or ref:<name>")->required();
  spectrum_cmd->add_flag("--eigenvectors", spectrum.eigenvectors, "include eigenvectors");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (wl_cmd->parsed()) return Emit(RunWl(wl));
  if (features_cmd->parsed()) {
    features.truncation = truncation;
    return Emit(RunFeatures(features));
  }
  if (bench_cmd->parsed()) {
    bench.seed = seed ? *seed : SeedFromEnvironment(0);
    return Emit(RunBench(bench));
  }
  if (spectrum_cmd->parsed()) return Emit(RunSpectrum(spectrum));
  if (selftest_cmd->parsed()) {
    const auto report = wlspectra::acceptance::RunAll(std::cerr);
    std::cout << report.ToJson() << "\n";
    return report.all_passed() ? kExitOk : kExitError;
  }
  return kExitError;
}
