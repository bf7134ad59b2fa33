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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <thread>

#include "bigclam/synth.h"

namespace bigclam {
namespace {

NetworkStats MakeStats(std::uint64_t v, std::uint64_t e) {
  return {v, e, static_cast<double>(e) / v, 2.0 * e / v};
}

TEST(StageProfilerTest, ZeroWorkAndResults) {
  StageProfiler p;
  double s = p.Time(Stage::kConductanceTest, [] {});
  EXPECT_GE(s, 0.0);
  EXPECT_LT(s, 0.01);
  auto [value, seconds] = p.Time(Stage::kGradientAscent, [] { return 42; });
  EXPECT_EQ(value, 42);
  EXPECT_GE(seconds, 0.0);
}

TEST(StageProfilerTest, NestingThrowsAndRecovers) {
  StageProfiler p;
  try {
    p.Time(Stage::kGradientAscent, [&] { p.Time(Stage::kCommunityAssociation, [] {}); });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNestedStage);
  }
  EXPECT_NO_THROW(p.Time(Stage::kCommunityAssociation, [] {}));
}

TEST(StageProfilerTest, SleepCalibrated) {
  StageProfiler p;
  double s = p.Time(Stage::kCommunityAssociation,
                    [] { std::this_thread::sleep_for(std::chrono::milliseconds(200)); });
  EXPECT_NEAR(s, 0.2, 0.02);
  EXPECT_DOUBLE_EQ(p.timings().ca_seconds, s);
  p.Time(Stage::kCommunityAssociation,
         [] { std::this_thread::sleep_for(std::chrono::milliseconds(100)); });
  EXPECT_NEAR(p.timings().ca_seconds, 0.3, 0.03);
}

TEST(StageTimingsTest, Proportions) {
  StageTimings zero;
  EXPECT_FALSE(zero.Proportions().has_value());
  StageProfiler p;
  volatile double sink = 0;
  for (Stage s : {Stage::kConductanceTest, Stage::kGradientAscent, Stage::kCommunityAssociation}) {
    p.Time(s, [&] {
      for (int i = 0; i < 100000; ++i) sink = sink + i;
    });
  }
  auto props = p.timings().Proportions();
  ASSERT_TRUE(props.has_value());
  EXPECT_NEAR((*props)[0] + (*props)[1] + (*props)[2], 1.0, 1e-9);
  StageTimings t{1.0, 3.0, 6.0};
  EXPECT_DOUBLE_EQ((*t.Proportions())[2], 0.6);
}

TEST(MeanAffiliationsTest, Examples) {
  EXPECT_EQ(MeanAffiliations(AffiliationMatrix(5, 3)), 0.0);
  AffiliationMatrix two(4, 6);
  for (NodeId u = 0; u < 4; ++u) {
    two.Set(u, u, 1.0);
    two.Set(u, u + 2, 0.5);
  }
  EXPECT_EQ(MeanAffiliations(two), 2.0);
  EXPECT_THROW(MeanAffiliations(AffiliationMatrix(0, 3)), Error);

  AffiliationMatrix m = RandomAffiliations(300, 20, 2.5, 0.1, 1.0, 8);
  std::size_t count = 0;
  for (NodeId u = 0; u < 300; ++u) {
    for (CommunityId c = 0; c < 20; ++c) count += m.Get(u, c) > 0.0;
  }
  EXPECT_EQ(MeanAffiliations(m), count / 300.0);
}

TEST(DominanceTest, Examples) {
  auto amazon = DominancePredicate(MakeStats(334863, 925872), 75149, 6.78, 100, 4);
  EXPECT_NEAR(amazon.rhs, 1296, 1.0);
  EXPECT_TRUE(amazon.dominated);
  EXPECT_EQ(amazon.lhs, 75149);

  auto small = DominancePredicate(MakeStats(1000, 10000), 10, 2, 100, 4);
  EXPECT_DOUBLE_EQ(small.rhs, 5000.0);
  EXPECT_FALSE(small.dominated);

  auto boundary = DominancePredicate(MakeStats(1000, 10000), 50000, 2, 100, 4);
  EXPECT_FALSE(boundary.dominated);
  EXPECT_TRUE(DominancePredicate(MakeStats(1000, 10000), 50001, 2, 100, 4).dominated);

  EXPECT_THROW(DominancePredicate(MakeStats(1000, 10000), 10, 0, 100, 4), Error);
  EXPECT_THROW(DominancePredicate(MakeStats(1000, 10000), 10, 2, 100, 4, 0.5), Error);
  EXPECT_THROW(DominancePredicate(MakeStats(0, 0), 10, 2, 100, 4), Error);
}

TEST(DominanceTest, PropertyMonotone) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    NetworkStats stats = MakeStats(100 + rng() % 10000, 100 + rng() % 100000);
    const double c = 1 + rng() % 100000;
    const double r = u(rng);
    const double k = 1 + rng() % 200;
    const double t = u(rng);
    auto base = DominancePredicate(stats, c, r, k, t);
    auto more_c = DominancePredicate(stats, c * 2, r, k, t);
    auto more_r = DominancePredicate(stats, c, r * 1.5, k, t);
    EXPECT_TRUE(!base.dominated || more_c.dominated);
    EXPECT_TRUE(base.dominated || !more_r.dominated);
    EXPECT_GT(more_r.rhs, base.rhs);
  }
}

RunReport SampleReport() {
  RunReport r;
  r.timings = {0.25, 1.5, 3.75};
  r.network = MakeStats(334863, 925872);
  r.communities = 75149;
  r.epochs = 100;
  r.workers = 4;
  r.t_star = 4;
  r.ca_mode = "both";
  r.ca_impl = "faithful";
  r.threshold = 4.064e-3;
  r.detected_communities = 70000;
  r.r_estimate = 6.78;
  r.r_truth = 6.5;
  r.avg_f1 = 0.8125;
  r.dominance = DominancePredicate(r.network, 75149, 6.78, 100, 4);
  r.ca_probes = 334863ull * 75149ull;
  r.ga_row_visits = 33486300;
  r.ga_rows_updated = 1234567;
  r.initial_log_likelihood = -1e7;
  r.final_log_likelihood = -5.5e6;
  r.ca_serial_seconds = 3.75;
  r.ca_parallel_seconds = 1.25;
  r.ca_speedup = 3.0;
  return r;
}

void ExpectSameReport(const RunReport& a, const RunReport& b) {
  EXPECT_EQ(a.timings.ct_seconds, b.timings.ct_seconds);
  EXPECT_EQ(a.timings.ga_seconds, b.timings.ga_seconds);
  EXPECT_EQ(a.timings.ca_seconds, b.timings.ca_seconds);
  EXPECT_EQ(a.network.node_count, b.network.node_count);
  EXPECT_EQ(a.network.edge_count, b.network.edge_count);
  EXPECT_EQ(a.communities, b.communities);
  EXPECT_EQ(a.epochs, b.epochs);
  EXPECT_EQ(a.workers, b.workers);
  EXPECT_EQ(a.t_star, b.t_star);
  EXPECT_EQ(a.ca_mode, b.ca_mode);
  EXPECT_EQ(a.ca_impl, b.ca_impl);
  EXPECT_EQ(a.threshold, b.threshold);
  EXPECT_EQ(a.detected_communities, b.detected_communities);
  EXPECT_EQ(a.r_estimate, b.r_estimate);
  EXPECT_EQ(a.r_truth, b.r_truth);
  EXPECT_EQ(a.avg_f1, b.avg_f1);
  ASSERT_EQ(a.dominance.has_value(), b.dominance.has_value());
  if (a.dominance) {
    EXPECT_EQ(a.dominance->dominated, b.dominance->dominated);
    EXPECT_EQ(a.dominance->lhs, b.dominance->lhs);
    EXPECT_EQ(a.dominance->rhs, b.dominance->rhs);
    EXPECT_EQ(a.dominance->margin, b.dominance->margin);
  }
  EXPECT_EQ(a.ca_probes, b.ca_probes);
  EXPECT_EQ(a.ga_row_visits, b.ga_row_visits);
  EXPECT_EQ(a.ga_rows_updated, b.ga_rows_updated);
  EXPECT_EQ(a.initial_log_likelihood, b.initial_log_likelihood);
  EXPECT_EQ(a.final_log_likelihood, b.final_log_likelihood);
  EXPECT_EQ(a.ca_serial_seconds, b.ca_serial_seconds);
  EXPECT_EQ(a.ca_parallel_seconds, b.ca_parallel_seconds);
  EXPECT_EQ(a.ca_speedup, b.ca_speedup);
}

TEST(ReportTest, JsonRoundTrip) {
  RunReport r = SampleReport();
  std::stringstream ss;
  EmitReport(r, ss, ReportFormat::kJson);
  RunReport parsed = ParseReport(ss);
  ExpectSameReport(r, parsed);

  std::stringstream again;
  EmitReport(parsed, again, ReportFormat::kJson);
  std::stringstream first;
  EmitReport(r, first, ReportFormat::kJson);
  EXPECT_EQ(first.str(), again.str());
}

TEST(ReportTest, DominanceFlagMatchesRecomputation) {
  RunReport r = SampleReport();
  std::stringstream ss;
  EmitReport(r, ss, ReportFormat::kJson);
  RunReport parsed = ParseReport(ss);
  auto recomputed = DominancePredicate(parsed.network, static_cast<double>(parsed.communities),
                                       parsed.r_estimate, parsed.epochs, parsed.t_star);
  EXPECT_EQ(parsed.dominance->dominated, recomputed.dominated);
}

TEST(ReportTest, ZeroTimingsOmitProportions) {
  RunReport r = SampleReport();
  r.timings = {};
  r.dominance.reset();
  r.r_truth.reset();
  r.avg_f1.reset();
  r.ca_serial_seconds.reset();
  r.ca_parallel_seconds.reset();
  r.ca_speedup.reset();
  std::stringstream ss;
  EmitReport(r, ss, ReportFormat::kJson);
  EXPECT_EQ(ss.str().find("proportion"), std::string::npos);
  ExpectSameReport(r, ParseReport(ss));

  std::stringstream with;
  EmitReport(SampleReport(), with, ReportFormat::kJson);
  EXPECT_NE(with.str().find("proportion"), std::string::npos);
}

TEST(ReportTest, TableAndMalformedInput) {
  std::stringstream table;
  EmitReport(SampleReport(), table, ReportFormat::kTable);
  EXPECT_NE(table.str().find("CA dominates"), std::string::npos);
  std::istringstream bad("{\"schema\": \"other\"}");
  EXPECT_THROW(ParseReport(bad), Error);
  std::istringstream junk("not json");
  EXPECT_THROW(ParseReport(junk), Error);
}

}  // namespace
}  // namespace bigclam
