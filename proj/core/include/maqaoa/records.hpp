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
 * @file records.hpp
 * Run identities, per-run trajectories and summaries, and their JSON forms.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/problems.hpp"

namespace maqaoa {

enum class Method { ExactOnly, SafeNoDistill, SafeDistill };

[[nodiscard]] std::string_view to_string(Method m) noexcept;
/// "exact-only", "safe-no-distill", "safe-distill".
[[nodiscard]] Method parse_method(std::string_view text);

/// Everything that names one run of the experiment matrix.
struct RunIdentity {
    Family family{Family::SK};
    std::size_t n_qubits{0};
    std::size_t depth{0};
    Method method{Method::ExactOnly};
    /// 0 for exact-only.
    std::size_t w_max{0};
    /// Distillation threshold; 0 unless method is SafeDistill.
    double threshold{0.0};
    std::size_t instance_index{0};
    std::uint64_t instance_seed{0};
    int init_id{0};
    std::string init_label;
    /// Hash of every field above together with the master seed.
    std::uint64_t run_seed{0};

    /// e.g. "sk-n12-p2-i0-init3-safe-distill-w4-t0.3".
    [[nodiscard]] std::string run_id() const;

    friend bool operator==(const RunIdentity &, const RunIdentity &) = default;
};

struct TrajectoryPoint {
    double energy{0.0};
    double alpha{0.0};
};

struct TrajectoryRecord {
    RunIdentity id;
    std::size_t pretrain_steps{0};
    std::size_t finetune_steps{0};
    double learning_rate{0.0};
    /// Surrogate energy before each pre-training update plus the final value.
    std::vector<double> surrogate_energies;
    /// Exact fine-tuning phase, steps 0..finetune_steps; step 0 precedes any
    /// exact update.
    std::vector<TrajectoryPoint> exact;
    std::optional<ParamSet> initial;
    std::optional<ParamSet> pretrained;
    std::optional<ParamSet> distilled;
    std::optional<ParamSet> final_params;
    std::size_t n_params{0};
    std::size_t n_active_before{0};
    std::size_t n_active_after{0};
    double reduction_fraction{0.0};
    bool degenerate{false};
    /// Approximation ratio of the exact energy at the pre-trained point.
    std::optional<double> alpha_lwpp;
};

struct RunSummary {
    RunIdentity id;
    double alpha_step0{0.0};
    double alpha_final{0.0};
    double alpha_best{0.0};
    std::size_t tau_099{0};
    std::size_t n_params{0};
    std::size_t n_active_before{0};
    std::size_t n_active{0};
    double c_ballpark{0.0};
    double reduction_fraction{0.0};
    std::optional<double> cost_angle_similarity;
    std::optional<double> alpha_lwpp;
    double energy_step0{0.0};
    double energy_final{0.0};
    bool degenerate{false};

    friend bool operator==(const RunSummary &, const RunSummary &) = default;
};

struct RunFailure {
    RunIdentity id;
    std::string message;
};

/// One line of JSON (no trailing newline).
[[nodiscard]] std::string to_json_line(const RunSummary &s);
[[nodiscard]] RunSummary summary_from_json(std::string_view line);
[[nodiscard]] std::string to_json_line(const RunFailure &f);

/// Meta line, one line per exact step, then the summary line.
[[nodiscard]] std::string to_jsonl(const TrajectoryRecord &rec, const RunSummary &s);

} // namespace maqaoa
