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

#include "bigclam/gradient_ascent.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "bigclam/error.h"
#include "bigclam/seeding.h"

namespace bigclam {

namespace {

constexpr std::size_t kBatchPerWorker = 32;
// Rows in one batch all see the same frozen F; keep a batch a small slice of
// the graph so simultaneous updates rarely touch interacting rows.
constexpr std::size_t kBatchFraction = 64;

std::size_t BatchSize(std::size_t n, int workers) {
  const auto w = static_cast<std::size_t>(workers);
  return std::clamp(n / kBatchFraction, w, kBatchPerWorker * w);
}

// Everything the row likelihood and gradient of one node need, gathered once
// per visit. All vectors are indexed by position in `support`, which is
// D_u plus the union of the neighbors' supports.
struct RowContext {
  std::vector<CommunityId> support;
  std::vector<double> current;
  // sum_f - F_u - neighbor sum, i.e. the total weight of non-neighbors.
  std::vector<double> rest;
  // Neighbor k owns nbr_entries[nbr_begin[k], nbr_begin[k + 1]).
  std::vector<std::size_t> nbr_begin;
  std::vector<std::pair<std::uint32_t, double>> nbr_entries;
  double min_prod = kDefaultMinProd;

  std::size_t neighbor_count() const { return nbr_begin.size() - 1; }

  double NeighborDot(std::size_t k, const std::vector<double>& x) const {
    double dot = 0.0;
    for (std::size_t i = nbr_begin[k]; i < nbr_begin[k + 1]; ++i) {
      dot += x[nbr_entries[i].first] * nbr_entries[i].second;
    }
    return std::max(dot, min_prod);
  }

  double LogLikelihood(const std::vector<double>& x) const {
    double ll = 0.0;
    for (std::size_t k = 0; k < neighbor_count(); ++k) ll += Log1mExp(NeighborDot(k, x));
    for (std::size_t i = 0; i < x.size(); ++i) ll -= x[i] * rest[i];
    return ll;
  }

  std::vector<double> Gradient(const std::vector<double>& x) const {
    std::vector<double> grad(support.size(), 0.0);
    for (std::size_t k = 0; k < neighbor_count(); ++k) {
      // exp(-x) / (1 - exp(-x)) == 1 / expm1(x)
      const double coef = 1.0 / std::expm1(NeighborDot(k, x));
      for (std::size_t i = nbr_begin[k]; i < nbr_begin[k + 1]; ++i) {
        grad[nbr_entries[i].first] += coef * nbr_entries[i].second;
      }
    }
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] -= rest[i];
    return grad;
  }
};

RowContext BuildContext(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                        double min_prod) {
  auto nbrs = graph.Neighbors(u);
  const SparseRow& own = m.Row(u);
  RowContext ctx;
  ctx.min_prod = min_prod;

  for (const auto& e : own.entries()) ctx.support.push_back(e.community);
  for (NodeId v : nbrs) {
    for (const auto& e : m.Row(v).entries()) ctx.support.push_back(e.community);
  }
  std::sort(ctx.support.begin(), ctx.support.end());
  ctx.support.erase(std::unique(ctx.support.begin(), ctx.support.end()), ctx.support.end());

  auto index_of = [&](CommunityId c) {
    return static_cast<std::uint32_t>(
        std::lower_bound(ctx.support.begin(), ctx.support.end(), c) - ctx.support.begin());
  };

  const std::size_t s = ctx.support.size();
  ctx.current.assign(s, 0.0);
  for (const auto& e : own.entries()) ctx.current[index_of(e.community)] = e.value;

  std::vector<double> neighbor_sum(s, 0.0);
  ctx.nbr_begin.reserve(nbrs.size() + 1);
  ctx.nbr_begin.push_back(0);
  for (NodeId v : nbrs) {
    for (const auto& e : m.Row(v).entries()) {
      auto i = index_of(e.community);
      ctx.nbr_entries.emplace_back(i, e.value);
      neighbor_sum[i] += e.value;
    }
    ctx.nbr_begin.push_back(ctx.nbr_entries.size());
  }

  auto sum_f = m.sum_f();
  ctx.rest.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    ctx.rest[i] = sum_f[ctx.support[i]] - ctx.current[i] - neighbor_sum[i];
  }
  return ctx;
}

SparseRow ToRow(const RowContext& ctx, const std::vector<double>& x) {
  std::vector<SparseEntry> entries;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) entries.push_back({ctx.support[i], x[i]});
  }
  return SparseRow::FromSortedUnclamped(std::move(entries));
}

double RelativeChange(double before, double after) {
  return std::abs(after - before) / std::max(std::abs(before), 1e-12);
}

std::vector<NodeId> VisitOrder(std::size_t n, std::uint64_t seed, int epoch_index) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(epoch_index)};
  std::mt19937_64 rng(seq);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  return order;
}

}  // namespace

double Log1mExp(double x) {
  // Split point ln 2 keeps both branches accurate (Maechler 2012).
  if (x <= 0.6931471805599453) return std::log(-std::expm1(-x));
  return std::log1p(-std::exp(-x));
}

double RowLogLikelihood(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                        double min_prod) {
  auto ctx = BuildContext(m, graph, u, min_prod);
  return ctx.LogLikelihood(ctx.current);
}

std::vector<SparseEntry> RowGradient(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                                     double min_prod) {
  auto ctx = BuildContext(m, graph, u, min_prod);
  auto grad = ctx.Gradient(ctx.current);
  // Outside the context support F_uc = 0 and no neighbor touches c, so the
  // component reduces to -sum_f[c].
  auto sum_f = m.sum_f();
  std::vector<SparseEntry> out;
  std::size_t i = 0;
  for (CommunityId c = 0; c < sum_f.size(); ++c) {
    if (i < ctx.support.size() && ctx.support[i] == c) {
      out.push_back({c, grad[i]});
      ++i;
    } else if (sum_f[c] > 0.0) {
      out.push_back({c, -sum_f[c]});
    }
  }
  return out;
}

RowProposal ProposeRowUpdate(const AffiliationMatrix& m, const Graph& graph, NodeId u,
                             const GaConfig& config) {
  auto ctx = BuildContext(m, graph, u, config.min_prod);
  RowProposal proposal;
  proposal.old_log_likelihood = ctx.LogLikelihood(ctx.current);
  proposal.new_log_likelihood = proposal.old_log_likelihood;

  auto direction = ctx.Gradient(ctx.current);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    double& d = direction[i];
    if (ctx.current[i] == 0.0 && d < 0.0) d = 0.0;
    d = std::clamp(d, -config.gradient_clip, config.gradient_clip);
    norm2 += d * d;
  }
  if (norm2 == 0.0) return proposal;

  std::vector<double> candidate(direction.size());
  double eta = 1.0;
  for (int t = 0; t < config.max_backtracks; ++t, eta *= config.step_beta) {
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      candidate[i] = std::clamp(ctx.current[i] + eta * direction[i], 0.0, kMaxWeight);
    }
    double ll = ctx.LogLikelihood(candidate);
    if (ll >= proposal.old_log_likelihood + config.step_alpha * eta * norm2) {
      proposal.row = ToRow(ctx, candidate);
      proposal.step = eta;
      proposal.new_log_likelihood = ll;
      proposal.accepted = true;
      break;
    }
  }
  return proposal;
}

double UpdateRow(AffiliationMatrix& m, const Graph& graph, NodeId u, const GaConfig& config) {
  auto proposal = ProposeRowUpdate(m, graph, u, config);
  if (!proposal.accepted) return 0.0;
  m.ReplaceRow(u, std::move(proposal.row));
  return proposal.step;
}

double RunEpoch(AffiliationMatrix& m, const Graph& graph, const GaConfig& config,
                int epoch_index, GaStats* stats) {
  const std::size_t n = graph.node_count();
  if (m.node_count() != n) {
    throw Error(ErrorCode::kInvalidArgument, "matrix and graph disagree on |V|");
  }
  const auto order = VisitOrder(n, config.rng_seed, epoch_index);
  double max_change = 0.0;
  std::uint64_t updated = 0;

  if (config.mode == GaMode::kSerial) {
    for (NodeId u : order) {
      auto proposal = ProposeRowUpdate(m, graph, u, config);
      if (proposal.accepted) {
        m.ReplaceRow(u, std::move(proposal.row));
        ++updated;
      }
      max_change = std::max(
          max_change, RelativeChange(proposal.old_log_likelihood, proposal.new_log_likelihood));
      if (config.on_row_visit) {
        config.on_row_visit(u, proposal.old_log_likelihood, proposal.new_log_likelihood);
      }
    }
  } else {
    const int workers = std::max(config.workers, 1);
    const std::size_t batch = BatchSize(n, workers);
    std::vector<RowProposal> proposals(std::min(batch, n));
#pragma omp parallel num_threads(workers)
    for (std::size_t start = 0; start < n; start += batch) {
      const auto count = static_cast<std::int64_t>(std::min(batch, n - start));
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < count; ++i) {
        proposals[i] = ProposeRowUpdate(m, graph, order[start + i], config);
      }
      // Implicit barrier: all proposals of the batch exist before any apply.
#pragma omp for schedule(static) reduction(max : max_change) reduction(+ : updated)
      for (std::int64_t i = 0; i < count; ++i) {
        auto& p = proposals[i];
        if (p.accepted) {
          m.ReplaceRow(order[start + i], std::move(p.row));
          ++updated;
        }
        max_change =
            std::max(max_change, RelativeChange(p.old_log_likelihood, p.new_log_likelihood));
      }
    }
  }
  if (stats != nullptr) {
    stats->row_visits += n;
    stats->rows_updated += updated;
  }
  return max_change;
}

double TotalLogLikelihood(const AffiliationMatrix& m, const Graph& graph, double min_prod) {
  double total = 0.0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    total += RowLogLikelihood(m, graph, u, min_prod);
  }
  return total;
}

GaStats Optimize(AffiliationMatrix& m, const Graph& graph, const GaConfig& config) {
  if (config.epochs < 0 || config.max_backtracks < 1 || config.workers < 1 ||
      !(config.step_alpha > 0.0 && config.step_alpha < 1.0) ||
      !(config.step_beta > 0.0 && config.step_beta < 1.0) || !(config.min_prod > 0.0) ||
      config.stop_tol < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid gradient ascent configuration");
  }
  const auto start = std::chrono::steady_clock::now();
  GaStats stats;
  stats.initial_log_likelihood = TotalLogLikelihood(m, graph, config.min_prod);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double delta = RunEpoch(m, graph, config, epoch, &stats);
    ++stats.epochs_run;
    if (config.stop_tol > 0.0 && delta < config.stop_tol) break;
  }
  stats.final_log_likelihood = stats.epochs_run == 0
                                   ? stats.initial_log_likelihood
                                   : TotalLogLikelihood(m, graph, config.min_prod);
  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

std::pair<AffiliationMatrix, GaStats> Fit(const Graph& graph, const GaConfig& config,
                                          std::size_t community_count) {
  auto seeds = LocallyMinimalNeighborhoods(graph, config.workers);
  if (community_count == 0) community_count = seeds.size();
  auto m = InitAffiliations(graph, seeds, community_count, config.rng_seed);
  auto stats = Optimize(m, graph, config);
  return {std::move(m), std::move(stats)};
}

}  // namespace bigclam
