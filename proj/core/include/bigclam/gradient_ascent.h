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

#ifndef BIGCLAM_GRADIENT_ASCENT_H_
#define BIGCLAM_GRADIENT_ASCENT_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bigclam/graph.h"
#include "bigclam/sparse_affiliation.h"

namespace bigclam {

inline constexpr double kDefaultMinProd = 1e-10;

enum class GaMode {
  // Visits nodes one at a time in a seeded random order. Bit-reproducible and
  // every accepted update increases that row's likelihood.
  kSerial,
  // Nodes are processed in batches: proposals for a batch are computed
  // concurrently against the matrix as it stood at the batch start, then
  // applied concurrently (each row by one worker). Later batches see earlier
  // batches' updates.
  kParallel,
};

struct GaConfig {
  int epochs = 100;
  double step_alpha = 0.05;
  double step_beta = 0.3;
  int max_backtracks = 10;
  double min_prod = kDefaultMinProd;
  // Early stop once an epoch's max relative row change drops below this.
  // Zero runs exactly `epochs` epochs.
  double stop_tol = 0.0;
  // Search-direction components are clipped to [-gradient_clip, gradient_clip].
  double gradient_clip = 10.0;
  int workers = 1;
  GaMode mode = GaMode::kSerial;
  std::uint64_t rng_seed = 0;
  // Serial mode only: called after every visited row with its likelihood
  // before and after the visit.
  std::function<void(NodeId, double, double)> on_row_visit;
};

struct GaStats {
  int epochs_run = 0;
  double initial_log_likelihood = 0.0;
  double final_log_likelihood = 0.0;
  double seconds = 0.0;
  std::uint64_t row_visits = 0;
  std::uint64_t rows_updated = 0;
};

// log(1 - exp(-x)) for x > 0 without cancellation for tiny x.
double Log1mExp(double x);

// l(F_u) = sum_{v in N(u)} log(1 - exp(-x_uv))
//          - F_u . (sum_f - F_u - sum_{v in N(u)} F_v),  x_uv = max(F_u . F_v, min_prod).
double RowLogLikelihood(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                        double min_prod = kDefaultMinProd);

// Gradient of RowLogLikelihood with respect to F_u, over the support
// D_u + (union of neighbor supports) + {c : sum_f[c] > 0}, ascending by
// community. Components can be negative.
std::vector<SparseEntry> RowGradient(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                                     double min_prod = kDefaultMinProd);

struct RowProposal {
  SparseRow row;
  double step = 0.0;
  double old_log_likelihood = 0.0;
  double new_log_likelihood = 0.0;
  bool accepted = false;
};

// Backtracking line search for one row without modifying the matrix. The
// search direction is the gradient with components that would push a zero
// weight negative removed, clipped to +-gradient_clip. A step eta is taken
// when l(P(F_u + eta d)) >= l(F_u) + step_alpha * eta * |d|^2, where P
// projects onto [0, kMaxWeight].
RowProposal ProposeRowUpdate(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                             const GaConfig& config);

// ProposeRowUpdate and, when accepted, ReplaceRow. Returns the accepted
// step size, or 0 when the row is unchanged.
double UpdateRow(AffiliationMatrix& m, const Graph& graph, NodeId u, const GaConfig& config);

// One pass over all nodes. Returns the max relative change of a row
// likelihood during the pass.
double RunEpoch(AffiliationMatrix& m, const Graph& graph, const GaConfig& config,
                int epoch_index, GaStats* stats = nullptr);

// Sum of RowLogLikelihood over all nodes (every pair counted from both ends).
double TotalLogLikelihood(const AffiliationMatrix& m, const Graph& graph,
                          double min_prod = kDefaultMinProd);

// Runs config.epochs epochs on an initialized matrix.
GaStats Optimize(AffiliationMatrix& m, const Graph& graph, const GaConfig& config);

// Conductance seeding followed by Optimize. community_count 0 uses the
// number of seeds found.
std::pair<AffiliationMatrix, GaStats> Fit(const Graph& graph, const GaConfig& config,
                                          std::size_t community_count);

}  // namespace bigclam

#endif  // BIGCLAM_GRADIENT_ASCENT_H_
