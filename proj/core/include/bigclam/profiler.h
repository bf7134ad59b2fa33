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

#ifndef BIGCLAM_PROFILER_H_
#define BIGCLAM_PROFILER_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "bigclam/error.h"
#include "bigclam/graph.h"
#include "bigclam/sparse_affiliation.h"

namespace bigclam {

enum class Stage { kConductanceTest = 0, kGradientAscent = 1, kCommunityAssociation = 2 };

std::string_view StageName(Stage stage);

struct StageTimings {
  double ct_seconds = 0.0;
  double ga_seconds = 0.0;
  double ca_seconds = 0.0;

  double& operator[](Stage stage);
  double Total() const { return ct_seconds + ga_seconds + ca_seconds; }
  // Fractions of Total() per stage; nullopt when nothing was timed.
  std::optional<std::array<double, 3>> Proportions() const;
};

// Wall-clock timing of the pipeline stages. Stages may not nest; repeated
// timing of the same stage accumulates.
class StageProfiler {
 public:
  // Runs `thunk` and adds its wall time to `stage`. Returns the seconds for
  // a void thunk, otherwise (result, seconds). Throws kNestedStage when
  // called from inside another timed stage.
  template <typename Thunk>
  auto Time(Stage stage, Thunk&& thunk) {
    if (active_) throw Error(ErrorCode::kNestedStage, "stage timing cannot nest");
    active_ = true;
    struct Reset {
      bool& flag;
      ~Reset() { flag = false; }
    } reset{active_};
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      timings_[stage] += s;
      return s;
    };
    if constexpr (std::is_void_v<std::invoke_result_t<Thunk>>) {
      std::forward<Thunk>(thunk)();
      return elapsed();
    } else {
      auto result = std::forward<Thunk>(thunk)();
      double s = elapsed();
      return std::pair<decltype(result), double>(std::move(result), s);
    }
  }

  const StageTimings& timings() const { return timings_; }

 private:
  bool active_ = false;
  StageTimings timings_;
};

// Mean number of affiliations per node, (1/|V|) sum_u |D_u|. Throws
// kEmptyGraph when the matrix has no rows.
double MeanAffiliations(const AffiliationMatrix& m);

struct DominanceResult {
  bool dominated = false;
  // |C|
  double lhs = 0.0;
  // (k r / t*) (|E| / |V|)^2
  double rhs = 0.0;
  double margin = 10.0;
};

// The community association stage dominates the runtime when
// |C| > margin * (k r / t*) (|E| / |V|)^2. Throws kInvalidArgument unless
// all inputs are positive and margin >= 1.
DominanceResult DominancePredicate(const NetworkStats& stats, double community_count, double r,
                                   double epochs, double t_star, double margin = 10.0);

struct RunReport {
  StageTimings timings;
  NetworkStats network;
  std::uint64_t communities = 0;
  int epochs = 0;
  int workers = 1;
  double t_star = 1.0;
  std::string ca_mode;
  std::string ca_impl;
  double threshold = 0.0;
  std::uint64_t detected_communities = 0;
  double r_estimate = 0.0;
  std::optional<double> r_truth;
  // Average F1 against a supplied ground-truth cover.
  std::optional<double> avg_f1;
  std::optional<DominanceResult> dominance;
  std::uint64_t ca_probes = 0;
  std::uint64_t ga_row_visits = 0;
  std::uint64_t ga_rows_updated = 0;
  double initial_log_likelihood = 0.0;
  double final_log_likelihood = 0.0;
  // Present when both CA variants ran on the same matrix.
  std::optional<double> ca_serial_seconds;
  std::optional<double> ca_parallel_seconds;
  std::optional<double> ca_speedup;
};

enum class ReportFormat { kJson, kTable };

// The JSON form has a fixed key order; see docs/report_schema.md.
void EmitReport(const RunReport& report, std::ostream& out, ReportFormat format);
// Parses the JSON form. Throws kMalformedLine on schema violations.
RunReport ParseReport(std::istream& in);

}  // namespace bigclam

#endif  // BIGCLAM_PROFILER_H_
