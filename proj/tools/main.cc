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

#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "commands.h"

namespace {

using bigclam::CaImpl;
using bigclam::cli::CaMode;

int DefaultWorkers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BigClam overlapping community detection with a parallel association stage"};
  app.require_subcommand(1);

  const std::map<std::string, CaMode> ca_modes{
      {"serial", CaMode::kSerial}, {"parallel", CaMode::kParallel}, {"both", CaMode::kBoth}};
  const std::map<std::string, CaImpl> ca_impls{{"faithful", CaImpl::kFaithful},
                                               {"transposed", CaImpl::kTransposed}};

  bigclam::cli::DetectConfig detect;
  detect.workers = DefaultWorkers();
  std::string ga_mode = "auto";
  auto* detect_cmd = app.add_subcommand("detect", "Detect communities in an edge list");
  detect_cmd->add_option("--input", detect.input, "Edge list file")->required();
  detect_cmd->add_option("--output-prefix", detect.output_prefix,
                         "Prefix for <prefix>cmtyvv.txt");
  detect_cmd->add_option("--communities", detect.communities,
                         "Communities to detect (0 = number of seeds)");
  detect_cmd->add_option("--epochs", detect.epochs, "Gradient ascent epochs")
      ->capture_default_str();
  detect_cmd->add_option("--workers", detect.workers, "Worker threads")->capture_default_str();
  detect_cmd->add_option("--ca-mode", detect.ca_mode, "serial, parallel or both")
      ->transform(CLI::CheckedTransformer(ca_modes, CLI::ignore_case));
  detect_cmd->add_option("--ca-impl", detect.ca_impl, "faithful or transposed")
      ->transform(CLI::CheckedTransformer(ca_impls, CLI::ignore_case));
  detect_cmd->add_option("--ga-mode", ga_mode, "auto, serial or parallel")
      ->check(CLI::IsMember({"auto", "serial", "parallel"}));
  detect_cmd->add_option("--min-members", detect.min_members, "Smallest reported community")
      ->capture_default_str();
  detect_cmd->add_option("--seed", detect.seed, "RNG seed")->capture_default_str();
  detect_cmd->add_option("--report", detect.report_path, "Write the JSON run report here");
  detect_cmd->add_option("--t-star", detect.t_star,
                         "Effective GA speedup for the dominance check (default: workers)");
  detect_cmd->add_option("--margin", detect.margin, "Factor operationalizing 'much greater'")
      ->capture_default_str();
  detect_cmd->add_option("--truth", detect.truth_path, "Ground-truth cover for scoring");

  std::string compare_a, compare_b;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two cover files up to ordering");
  compare_cmd->add_option("a", compare_a)->required();
  compare_cmd->add_option("b", compare_b)->required();

  bigclam::cli::SynthConfig synth;
  synth.spec.node_count = 150;
  synth.spec.community_count = 5;
  synth.spec.membership_prob = 0.4;
  synth.spec.background_eps = 0.01;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted affiliation graph");
  synth_cmd->add_option("--nodes", synth.spec.node_count)->capture_default_str();
  synth_cmd->add_option("--communities", synth.spec.community_count)->capture_default_str();
  synth_cmd->add_option("--membership-prob", synth.spec.membership_prob)->capture_default_str();
  synth_cmd->add_option("--weight-lo", synth.spec.weight_lo)->capture_default_str();
  synth_cmd->add_option("--weight-hi", synth.spec.weight_hi)->capture_default_str();
  synth_cmd->add_option("--background-eps", synth.spec.background_eps)->capture_default_str();
  synth_cmd->add_option("--seed", synth.spec.rng_seed, "Plant seed")->capture_default_str();
  synth_cmd->add_option("--graph-seed", synth.graph_seed, "Edge sampling seed")
      ->capture_default_str();
  synth_cmd->add_option("--output-prefix", synth.output_prefix,
                        "Writes <prefix>network.txt and <prefix>truth.txt");

  bigclam::cli::BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Serial vs parallel association timing");
  bench_cmd->add_option("--input", bench.input, "Edge list to fit (default: synthetic matrix)");
  bench_cmd->add_option("--epochs", bench.epochs)->capture_default_str();
  bench_cmd->add_option("--communities", bench.communities);
  bench_cmd->add_option("--nodes", bench.synthetic_nodes)->capture_default_str();
  bench_cmd->add_option("--synthetic-communities", bench.synthetic_communities)
      ->capture_default_str();
  bench_cmd->add_option("--support", bench.synthetic_support, "Mean affiliations per node")
      ->capture_default_str();
  bench_cmd->add_option("--threshold", bench.threshold, "Threshold for synthetic matrices")
      ->capture_default_str();
  bench_cmd->add_option("--workers-list", bench.workers_list)->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();
  bench_cmd->add_option("--ca-impl", bench.ca_impl)
      ->transform(CLI::CheckedTransformer(ca_impls, CLI::ignore_case));
  bench_cmd->add_option("--min-members", bench.min_members)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv_path, "Write CSV here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (*detect_cmd) {
    if (ga_mode != "auto") detect.parallel_ga = ga_mode == "parallel";
    return bigclam::cli::RunDetect(detect, std::cerr);
  }
  if (*compare_cmd) return bigclam::cli::RunCompare(compare_a, compare_b, std::cerr);
  if (*synth_cmd) return bigclam::cli::RunSynth(synth, std::cerr);
  return bigclam::cli::RunBench(bench, std::cout, std::cerr);
}
