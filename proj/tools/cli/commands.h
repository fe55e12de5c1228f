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
#ifndef WLSPECTRA_TOOLS_COMMANDS_H_
#define WLSPECTRA_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlspectra/graph.h"

namespace wlspectra::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDistinguishable = 1;
inline constexpr int kExitError = 2;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;  // JSON or requested file content
  std::string err;
};

// Reads an edge-list file, or a built-in graph given as "ref:<name>".
Graph LoadGraph(const std::string& source);

struct WlOptions {
  std::string first;
  std::string second;
  std::string pre = "constant";  // constant | degree | spectral | diag-kwl
  std::string spectral_cfg = "(0,0,1,none)";
  int k = 2;
};
CommandOutput RunWl(const WlOptions& options);

struct FeaturesOptions {
  std::string input;            // edge-list file, ref:<name>, or TU directory
  bool tu_directory = false;
  std::string spectral_cfg = "(-1,1,10,none)";
  std::optional<int> truncation;
  int steps = 1000;
  std::string format = "csv";   // csv | json
  std::string output;           // empty: returned in CommandOutput::out
};
CommandOutput RunFeatures(const FeaturesOptions& options);

struct BenchOptions {
  std::string sources = "molecules";  // molecules | cospectral
  int count = 1000;
  std::uint64_t seed = 0;
  std::string out_dir;                // empty: dataset is not written
};
CommandOutput RunBench(const BenchOptions& options);

// Configurations evaluated by RunBench, in report order.
std::vector<std::string> BenchConfigurations();

struct SpectrumOptions {
  std::string input;
  bool eigenvectors = false;
};
CommandOutput RunSpectrum(const SpectrumOptions& options);

// WLSPECTRA_SEED if set and numeric, else fallback.
std::uint64_t SeedFromEnvironment(std::uint64_t fallback);

}  // namespace wlspectra::cli

#endif  // WLSPECTRA_TOOLS_COMMANDS_H_
