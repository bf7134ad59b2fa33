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

#include "bigclam/profiler.h"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace bigclam {

using Json = nlohmann::ordered_json;

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kConductanceTest: return "CT";
    case Stage::kGradientAscent: return "GA";
    case Stage::kCommunityAssociation: return "CA";
  }
  return "?";
}

double& StageTimings::operator[](Stage stage) {
  switch (stage) {
    case Stage::kConductanceTest: return ct_seconds;
    case Stage::kGradientAscent: return ga_seconds;
    case Stage::kCommunityAssociation: break;
  }
  return ca_seconds;
}

std::optional<std::array<double, 3>> StageTimings::Proportions() const {
  const double total = Total();
  if (!(total > 0.0)) return std::nullopt;
  return std::array<double, 3>{ct_seconds / total, ga_seconds / total, ca_seconds / total};
}

double MeanAffiliations(const AffiliationMatrix& m) {
  if (m.node_count() == 0) throw Error(ErrorCode::kEmptyGraph, "no rows");
  return static_cast<double>(m.NonZeroCount()) / static_cast<double>(m.node_count());
}

DominanceResult DominancePredicate(const NetworkStats& stats, double community_count, double r,
                                   double epochs, double t_star, double margin) {
  if (stats.node_count == 0 || stats.edge_count == 0 || !(community_count > 0.0) ||
      !(r > 0.0) || !(epochs > 0.0) || !(t_star > 0.0) || !(margin >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dominance inputs must be positive, margin >= 1");
  }
  const double degree =
      static_cast<double>(stats.edge_count) / static_cast<double>(stats.node_count);
  DominanceResult result;
  result.lhs = community_count;
  result.rhs = (epochs * r / t_star) * degree * degree;
  result.margin = margin;
  result.dominated = result.lhs > margin * result.rhs;
  return result;
}

namespace {

template <typename T>
void PutOptional(Json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

Json ToJson(const RunReport& r) {
  Json j;
  j["schema"] = "bigclam.run_report/1";
  j["network"] = {{"nodes", r.network.node_count},
                  {"edges", r.network.edge_count},
                  {"edges_per_node", r.network.edges_per_node},
                  {"average_degree", r.network.average_degree}};
  j["config"] = {{"communities", r.communities}, {"epochs", r.epochs},
                 {"workers", r.workers},         {"t_star", r.t_star},
                 {"ca_mode", r.ca_mode},         {"ca_impl", r.ca_impl}};
  Json timings = {{"ct_seconds", r.timings.ct_seconds},
                  {"ga_seconds", r.timings.ga_seconds},
                  {"ca_seconds", r.timings.ca_seconds},
                  {"total_seconds", r.timings.Total()}};
  if (auto p = r.timings.Proportions()) {
    timings["proportions"] = {{"ct", (*p)[0]}, {"ga", (*p)[1]}, {"ca", (*p)[2]}};
  }
  j["timings"] = std::move(timings);
  Json ca = {{"threshold", r.threshold},
             {"detected_communities", r.detected_communities},
             {"probes", r.ca_probes}};
  PutOptional(ca, "serial_seconds", r.ca_serial_seconds);
  PutOptional(ca, "parallel_seconds", r.ca_parallel_seconds);
  PutOptional(ca, "speedup", r.ca_speedup);
  j["ca"] = std::move(ca);
  j["ga"] = {{"row_visits", r.ga_row_visits},
             {"rows_updated", r.ga_rows_updated},
             {"initial_log_likelihood", r.initial_log_likelihood},
             {"final_log_likelihood", r.final_log_likelihood}};
  Json aff = {{"r_estimate", r.r_estimate}};
  PutOptional(aff, "r_truth", r.r_truth);
  PutOptional(aff, "avg_f1", r.avg_f1);
  j["affiliations"] = std::move(aff);
  if (r.dominance) {
    j["dominance"] = {{"dominated", r.dominance->dominated},
                      {"lhs", r.dominance->lhs},
                      {"rhs", r.dominance->rhs},
                      {"margin", r.dominance->margin}};
  }
  return j;
}

void WriteTable(const RunReport& r, std::ostream& out) {
  char line[160];
  auto row = [&](const char* key, const std::string& value) {
    std::snprintf(line, sizeof(line), "%-24s %s\n", key, value.c_str());
    out << line;
  };
  auto num = [](double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  row("nodes", std::to_string(r.network.node_count));
  row("edges", std::to_string(r.network.edge_count));
  row("|E|/|V|", num(r.network.edges_per_node));
  row("communities", std::to_string(r.communities));
  row("epochs", std::to_string(r.epochs));
  row("workers", std::to_string(r.workers));
  auto p = r.timings.Proportions();
  const double secs[3] = {r.timings.ct_seconds, r.timings.ga_seconds, r.timings.ca_seconds};
  const char* names[3] = {"CT seconds", "GA seconds", "CA seconds"};
  for (int i = 0; i < 3; ++i) {
    std::string v = num(secs[i]);
    if (p) v += " (" + num(100.0 * (*p)[i]) + "%)";
    row(names[i], v);
  }
  row("threshold", num(r.threshold));
  row("detected communities", std::to_string(r.detected_communities));
  row("CA probes", std::to_string(r.ca_probes));
  if (r.ca_speedup) row("CA speedup", num(*r.ca_speedup));
  row("r estimate", num(r.r_estimate));
  if (r.r_truth) row("r truth", num(*r.r_truth));
  if (r.avg_f1) row("average F1", num(*r.avg_f1));
  if (r.dominance) {
    row("CA dominates", std::string(r.dominance->dominated ? "yes" : "no") + " (|C|=" +
                            num(r.dominance->lhs) + " vs " + num(r.dominance->margin) + " x " +
                            num(r.dominance->rhs) + ")");
  }
}

template <typename T>
std::optional<T> GetOptional(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void EmitReport(const RunReport& report, std::ostream& out, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    out << ToJson(report).dump(2) << '\n';
  } else {
    WriteTable(report, out);
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failure");
}

RunReport ParseReport(std::istream& in) {
  try {
    Json j = Json::parse(in);
    if (j.at("schema") != "bigclam.run_report/1") {
      throw Error(ErrorCode::kMalformedLine, "unknown report schema");
    }
    RunReport r;
    const auto& net = j.at("network");
    r.network.node_count = net.at("nodes").get<std::uint64_t>();
    r.network.edge_count = net.at("edges").get<std::uint64_t>();
    r.network.edges_per_node = net.at("edges_per_node").get<double>();
    r.network.average_degree = net.at("average_degree").get<double>();
    const auto& cfg = j.at("config");
    r.communities = cfg.at("communities").get<std::uint64_t>();
    r.epochs = cfg.at("epochs").get<int>();
    r.workers = cfg.at("workers").get<int>();
    r.t_star = cfg.at("t_star").get<double>();
    r.ca_mode = cfg.at("ca_mode").get<std::string>();
    r.ca_impl = cfg.at("ca_impl").get<std::string>();
    const auto& t = j.at("timings");
    r.timings.ct_seconds = t.at("ct_seconds").get<double>();
    r.timings.ga_seconds = t.at("ga_seconds").get<double>();
    r.timings.ca_seconds = t.at("ca_seconds").get<double>();
    const auto& ca = j.at("ca");
    r.threshold = ca.at("threshold").get<double>();
    r.detected_communities = ca.at("detected_communities").get<std::uint64_t>();
    r.ca_probes = ca.at("probes").get<std::uint64_t>();
    r.ca_serial_seconds = GetOptional<double>(ca, "serial_seconds");
    r.ca_parallel_seconds = GetOptional<double>(ca, "parallel_seconds");
    r.ca_speedup = GetOptional<double>(ca, "speedup");
    const auto& ga = j.at("ga");
    r.ga_row_visits = ga.at("row_visits").get<std::uint64_t>();
    r.ga_rows_updated = ga.at("rows_updated").get<std::uint64_t>();
    r.initial_log_likelihood = ga.at("initial_log_likelihood").get<double>();
    r.final_log_likelihood = ga.at("final_log_likelihood").get<double>();
    const auto& aff = j.at("affiliations");
    r.r_estimate = aff.at("r_estimate").get<double>();
    r.r_truth = GetOptional<double>(aff, "r_truth");
    r.avg_f1 = GetOptional<double>(aff, "avg_f1");
    if (j.contains("dominance")) {
      const auto& d = j.at("dominance");
      r.dominance = DominanceResult{d.at("dominated").get<bool>(), d.at("lhs").get<double>(),
                                    d.at("rhs").get<double>(), d.at("margin").get<double>()};
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedLine, std::string("report: ") + e.what());
  }
}

}  // namespace bigclam
