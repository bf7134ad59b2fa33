// Copyright 2026 The BigClam Speedup Authors.
//
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

#ifndef BIGCLAM_TOOLS_COMMANDS_H_
#define BIGCLAM_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bigclam/community_assoc.h"
#include "bigclam/synth.h"

namespace bigclam::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
// Serial and parallel community association disagreed, or covers differ
// (compare).
inline constexpr int kExitMismatch = 2;

enum class CaMode { kSerial, kParallel, kBoth };

struct DetectConfig {
  std::string input;
  std::string output_prefix;
  // 0 uses the number of locally minimal neighborhoods.
  std::size_t communities = 0;
  int epochs = 100;
  int workers = 1;
  // Unset: serial gradient ascent for one worker, parallel otherwise.
  std::optional<bool> parallel_ga;
  CaMode ca_mode = CaMode::kSerial;
  CaImpl ca_impl = CaImpl::kFaithful;
  std::size_t min_members = 3;
  std::uint64_t seed = 0;
  std::string report_path;
  // Defaults to the worker count.
  std::optional<double> t_star;
  double margin = 10.0;
  std::string truth_path;
};

// CT -> GA -> CA on the input edge list. Writes <prefix>cmtyvv.txt and, when
// report_path is set, the JSON run report. A human summary goes to `log`.
int RunDetect(const DetectConfig& config, std::ostream& log);

// Exit 0 iff the two cover files are equal up to ordering.
int RunCompare(const std::string& path_a, const std::string& path_b, std::ostream& log);

struct SynthConfig {
  PlantSpec spec;
  std::uint64_t graph_seed = 1;
  std::string output_prefix;
};

// Writes <prefix>network.txt (edge list) and <prefix>truth.txt (cover).
int RunSynth(const SynthConfig& config, std::ostream& log);

struct BenchConfig {
  // Edge list to fit; when empty a random affiliation matrix is used.
  std::string input;
  int epochs = 100;
  std::size_t communities = 0;
  std::size_t synthetic_nodes = 200000;
  std::size_t synthetic_communities = 4000;
  double synthetic_support = 3.0;
  // Only used with a synthetic matrix; graphs use the background threshold.
  double threshold = 0.5;
  std::vector<int> workers_list{1, 2, 4, 8};
  int repeats = 3;
  CaImpl ca_impl = CaImpl::kFaithful;
  std::size_t min_members = 3;
  std::uint64_t seed = 0;
  std::string csv_path;
};

// Times serial CA once per repeat, then parallel CA per worker count,
// verifying canonical equality on every run. Emits CSV
// "workers,ca_seconds,speedup" (median seconds over repeats) to `csv` or
// csv_path.
int RunBench(const BenchConfig& config, std::ostream& csv, std::ostream& log);

}  // namespace bigclam::cli

#endif  // BIGCLAM_TOOLS_COMMANDS_H_
