// Copyright 2026 The maqaoa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file metrics.hpp
 * Approximation ratio, first-hit step, fine-tuning cost estimate, circular
 * cosine similarity and per-cell aggregation into the report tables.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "maqaoa/problems.hpp"
#include "maqaoa/records.hpp"

namespace maqaoa {

/// (e_max - energy) / (e_max - e_min). Throws UndefinedRatioError when the
/// extremes coincide.
[[nodiscard]] double approximation_ratio(double energy, const EnergyExtremes &extremes);

/// min{t : alpha(t) >= level * max(alpha)}.
[[nodiscard]] std::size_t first_hit_step(std::span<const double> alphas,
                                         double level = 0.99);

[[nodiscard]] double ballpark_cost(double n_active, double tau);

/// (1/d) sum_k cos(phi_k - psi_k).
[[nodiscard]] double circular_cosine_similarity(std::span<const double> phi,
                                                std::span<const double> psi);

/// Similarity of the cost angles of two checkpoints over the indices active
/// in both; nullopt when there are none.
[[nodiscard]] std::optional<double> cost_angle_similarity(const ParamSet &before,
                                                          const ParamSet &after);

[[nodiscard]] RunSummary summarize(const TrajectoryRecord &rec);

struct CellKey {
    Family family{Family::SK};
    std::size_t n_qubits{0};
    std::size_t depth{0};
    Method method{Method::ExactOnly};
    std::size_t w_max{0};
    double threshold{0.0};

    friend auto operator<=>(const CellKey &, const CellKey &) = default;
};

[[nodiscard]] CellKey cell_of(const RunIdentity &id);

struct CellAggregate {
    CellKey key;
    std::size_t runs{0};
    std::size_t degenerate_runs{0};
    double mean_alpha_step0{0.0};
    double best_alpha_step0{0.0};
    double mean_alpha_final{0.0};
    double best_alpha_final{0.0};
    std::optional<double> mean_alpha_lwpp;
    std::optional<double> best_alpha_lwpp;
    double mean_reduction{0.0};
    double mean_tau{0.0};
    double mean_n_active{0.0};
    /// mean N_active x mean tau, the tabulated estimate.
    double c_ballpark{0.0};
    /// Mean over runs of N_active * tau.
    double mean_run_c_ballpark{0.0};
    std::optional<double> mean_cost_angle_similarity;
};

/// Groups by CellKey, in key order. Cells without runs do not appear.
[[nodiscard]] std::vector<CellAggregate> aggregate(std::span<const RunSummary> summaries);

/// Pooled reduction statistics over every (family, n, p) setting that has
/// exact-only, safe-no-distill at w_max and safe-distill at (w_max, threshold).
struct ReductionStats {
    std::size_t settings{0};
    double mean_n_active_full{0.0};
    double mean_n_active_distill{0.0};
    /// 1 - mean_n_active_distill / mean_n_active_full.
    double param_reduction{0.0};
    /// Mean of the per-cell distillation reduction fractions.
    double mean_reduction_fraction{0.0};
    double sum_c_exact{0.0};
    double sum_c_no_distill{0.0};
    double sum_c_distill{0.0};
    /// 1 - sum C_distill / sum C_exact.
    double workload_reduction{0.0};
    double workload_reduction_no_distill{0.0};
    double mean_tau_exact{0.0};
    double mean_tau_no_distill{0.0};
    double mean_tau_distill{0.0};
    /// 1 - mean_tau_distill / mean_tau_no_distill.
    double step_reduction{0.0};
};

[[nodiscard]] ReductionStats reduction_stats(std::span<const CellAggregate> cells,
                                             std::size_t w_max, double threshold);

/// Step-0 -> final-best progression per family/method with one column per
/// (p, n), for safe-no-distill and safe-distill at (w_max, threshold).
void write_table_progression(std::ostream &os, std::span<const CellAggregate> cells,
                             std::size_t w_max, double threshold);
/// Fine-tuning cost estimate per family/method with exact-to-method
/// reduction factors.
void write_table_cost(std::ostream &os, std::span<const CellAggregate> cells,
                      std::size_t w_max, double threshold);
/// Every aggregated cell, one row each, numeric columns.
void write_cells_csv(std::ostream &os, std::span<const CellAggregate> cells);
/// Per-threshold final ratios with exact-only and pre-training-only
/// references.
void write_threshold_summary(std::ostream &os, std::span<const CellAggregate> cells);
void write_reductions_csv(std::ostream &os, const ReductionStats &stats);
/// One row per run.
void write_summary_csv(std::ostream &os, std::span<const RunSummary> summaries);

} // namespace maqaoa
