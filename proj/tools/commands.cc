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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "bigclam/bigclam.h"

namespace bigclam::cli {

namespace {

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  return out;
}

std::string_view ModeName(CaMode mode) {
  switch (mode) {
    case CaMode::kSerial: return "serial";
    case CaMode::kParallel: return "parallel";
    case CaMode::kBoth: return "both";
  }
  return "?";
}

std::string_view ImplName(CaImpl impl) {
  return impl == CaImpl::kFaithful ? "faithful" : "transposed";
}

template <typename F>
double Seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

int RunDetect(const DetectConfig& config, std::ostream& log) {
  try {
    if (config.workers < 1 || config.epochs < 0) {
      throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1 and epochs >= 0");
    }
    Graph graph;
    {
      auto in = OpenInput(config.input);
      graph = LoadEdgeList(in);
    }
    const NetworkStats stats = Stats(graph);
    StageProfiler profiler;

    AffiliationMatrix affiliations;
    profiler.Time(Stage::kConductanceTest, [&] {
      auto seeds = LocallyMinimalNeighborhoods(graph, config.workers);
      std::size_t count = config.communities != 0 ? config.communities : seeds.size();
      affiliations = InitAffiliations(graph, seeds, count, config.seed);
    });

    GaConfig ga;
    ga.epochs = config.epochs;
    ga.workers = config.workers;
    ga.rng_seed = config.seed;
    ga.mode = config.parallel_ga.value_or(config.workers > 1) ? GaMode::kParallel
                                                             : GaMode::kSerial;
    auto [ga_stats, ga_seconds] =
        profiler.Time(Stage::kGradientAscent, [&] { return Optimize(affiliations, graph, ga); });
    (void)ga_seconds;

    const double delta = AffiliationThreshold(stats.node_count, stats.edge_count);
    CaOptions ca;
    ca.min_members = config.min_members;
    ca.workers = config.workers;
    ca.impl = config.ca_impl;
    CaCounters counters;

    RunReport report;
    Cover cover;
    if (config.ca_mode == CaMode::kParallel) {
      profiler.Time(Stage::kCommunityAssociation,
                    [&] { cover = ExtractParallel(affiliations, delta, ca, &counters); });
    } else {
      report.ca_serial_seconds = profiler.Time(
          Stage::kCommunityAssociation,
          [&] { cover = ExtractSerial(affiliations, delta, ca, &counters); });
      if (config.ca_mode == CaMode::kBoth) {
        Cover parallel;
        report.ca_parallel_seconds =
            Seconds([&] { parallel = ExtractParallel(affiliations, delta, ca); });
        if (*report.ca_parallel_seconds > 0.0) {
          report.ca_speedup = *report.ca_serial_seconds / *report.ca_parallel_seconds;
        }
        auto equality = CompareCovers(cover, parallel);
        if (!equality.equal) {
          log << "error: parallel community association disagrees with serial: "
              << equality.first_diff.value_or("") << '\n';
          return kExitMismatch;
        }
      }
    }

    {
      auto out = OpenOutput(config.output_prefix + "cmtyvv.txt");
      WriteCover(cover, out, &graph);
    }

    report.timings = profiler.timings();
    report.network = stats;
    report.communities = affiliations.community_count();
    report.epochs = config.epochs;
    report.workers = config.workers;
    report.t_star = config.t_star.value_or(static_cast<double>(config.workers));
    report.ca_mode = ModeName(config.ca_mode);
    report.ca_impl = ImplName(config.ca_impl);
    report.threshold = delta;
    report.detected_communities = cover.size();
    report.r_estimate = MeanAffiliations(affiliations);
    report.ca_probes = counters.probes;
    report.ga_row_visits = ga_stats.row_visits;
    report.ga_rows_updated = ga_stats.rows_updated;
    report.initial_log_likelihood = ga_stats.initial_log_likelihood;
    report.final_log_likelihood = ga_stats.final_log_likelihood;
    if (report.r_estimate > 0.0 && config.epochs > 0) {
      report.dominance = DominancePredicate(stats, static_cast<double>(report.communities),
                                            report.r_estimate, config.epochs, report.t_star,
                                            config.margin);
    }
    if (!config.truth_path.empty()) {
      auto in = OpenInput(config.truth_path);
      Cover truth = ReadCover(in);
      std::uint64_t memberships = 0;
      for (const auto& c : truth) memberships += c.size();
      report.r_truth = static_cast<double>(memberships) / static_cast<double>(stats.node_count);
      if (!truth.empty() && !cover.empty()) {
        Cover labelled = cover;
        for (auto& c : labelled) {
          for (auto& u : c) u = graph.Label(static_cast<NodeId>(u));
        }
        report.avg_f1 = AverageF1(labelled, truth);
      }
    }
    if (!config.report_path.empty()) {
      auto out = OpenOutput(config.report_path);
      EmitReport(report, out, ReportFormat::kJson);
    }
    EmitReport(report, log, ReportFormat::kTable);
    return kExitOk;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int RunCompare(const std::string& path_a, const std::string& path_b, std::ostream& log) {
  try {
    auto in_a = OpenInput(path_a);
    auto in_b = OpenInput(path_b);
    Cover a = ReadCover(in_a);
    Cover b = ReadCover(in_b);
    auto report = CompareCovers(a, b);
    if (report.equal) {
      log << "equal (" << a.size() << " communities)\n";
      return kExitOk;
    }
    log << "different: " << report.first_diff.value_or("") << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int RunSynth(const SynthConfig& config, std::ostream& log) {
  try {
    auto model = PlantCover(config.spec);
    Graph graph = GenerateGraph(model.affiliations, config.spec.background_eps, config.graph_seed);
    {
      auto out = OpenOutput(config.output_prefix + "network.txt");
      out << "# planted affiliation graph: nodes " << graph.node_count() << " edges "
          << graph.edge_count() << '\n';
      for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (NodeId v : graph.Neighbors(u)) {
          if (u < v) out << u << '\t' << v << '\n';
        }
      }
      if (!out) throw Error(ErrorCode::kIoError, "write failure");
    }
    {
      auto out = OpenOutput(config.output_prefix + "truth.txt");
      WriteCover(model.truth, out);
    }
    log << "nodes " << graph.node_count() << " edges " << graph.edge_count() << " communities "
        << model.truth.size() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int RunBench(const BenchConfig& config, std::ostream& csv, std::ostream& log) {
  try {
    if (config.repeats < 1 || config.workers_list.empty() ||
        std::any_of(config.workers_list.begin(), config.workers_list.end(),
                    [](int w) { return w < 1; })) {
      throw Error(ErrorCode::kInvalidArgument, "need repeats >= 1 and positive worker counts");
    }
    AffiliationMatrix affiliations;
    double delta = config.threshold;
    if (!config.input.empty()) {
      auto in = OpenInput(config.input);
      Graph graph = LoadEdgeList(in);
      GaConfig ga;
      ga.epochs = config.epochs;
      ga.rng_seed = config.seed;
      affiliations = Fit(graph, ga, config.communities).first;
      delta = AffiliationThreshold(graph.node_count(), graph.edge_count());
    } else {
      affiliations = RandomAffiliations(config.synthetic_nodes, config.synthetic_communities,
                                        config.synthetic_support, 0.01, 1.0, config.seed);
    }

    CaOptions options;
    options.min_members = config.min_members;
    options.impl = config.ca_impl;

    Cover reference;
    std::vector<double> serial_runs;
    for (int r = 0; r < config.repeats; ++r) {
      serial_runs.push_back(
          Seconds([&] { reference = ExtractSerial(affiliations, delta, options); }));
    }
    const Cover canonical = Canonicalize(reference);
    const double serial = Median(serial_runs);
    log << "serial CA: " << serial << " s, " << reference.size() << " communities\n";

    std::ofstream file;
    if (!config.csv_path.empty()) file = OpenOutput(config.csv_path);
    std::ostream& sink = config.csv_path.empty() ? csv : file;
    sink << "workers,ca_seconds,speedup\n";
    for (int workers : config.workers_list) {
      options.workers = workers;
      std::vector<double> runs;
      for (int r = 0; r < config.repeats; ++r) {
        Cover cover;
        runs.push_back(Seconds([&] { cover = ExtractParallel(affiliations, delta, options); }));
        if (Canonicalize(std::move(cover)) != canonical) {
          log << "error: parallel CA with " << workers << " workers disagrees with serial\n";
          return kExitMismatch;
        }
      }
      const double seconds = Median(runs);
      sink << workers << ',' << seconds << ',' << (seconds > 0.0 ? serial / seconds : 0.0)
           << '\n';
    }
    if (!sink) throw Error(ErrorCode::kIoError, "write failure");
    return kExitOk;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace bigclam::cli
