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
 * @file sweep.hpp
 * Experiment matrix planning and execution over a bounded worker pool.
 */
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/records.hpp"
#include "maqaoa/train.hpp"

namespace maqaoa {

struct SweepSpec {
    std::vector<Family> families{Family::SK, Family::Grid2D, Family::MaxCut};
    std::vector<std::size_t> sizes{12, 16, 20};
    std::vector<std::size_t> depths{2, 4};
    std::vector<std::size_t> w_max_set{3, 4};
    std::vector<double> thresholds{0.0, 0.01, 0.3};
    std::vector<Method> methods{Method::ExactOnly, Method::SafeNoDistill, Method::SafeDistill};
    std::size_t instances{5};
    std::vector<InitSpec> inits = standard_init_roster();
    std::uint64_t master_seed{0};
    std::size_t pretrain_steps{kDefaultPretrainSteps};
    std::size_t finetune_steps{kDefaultFinetuneSteps};
    AdamConfig adam{};
    double maxcut_edge_probability{0.3};
    std::size_t workers{1};
};

[[nodiscard]] std::uint64_t instance_seed(std::uint64_t master, Family family, std::size_t n,
                                          std::size_t instance_index);
/// Shared by every method, w_max and threshold of one (instance, p, init).
[[nodiscard]] std::uint64_t init_seed(std::uint64_t master, Family family, std::size_t n,
                                      std::size_t depth, std::size_t instance_index,
                                      int init_id);
[[nodiscard]] std::uint64_t run_seed(std::uint64_t master, const RunIdentity &id);

/// Every run of the matrix in execution order.
[[nodiscard]] std::vector<RunIdentity> plan_runs(const SweepSpec &spec);

/// Supplies instances with extremes; the default generates and brute-forces.
using InstanceProvider =
    std::function<ProblemInstance(Family family, std::size_t n, std::size_t index,
                                  std::uint64_t seed)>;

/// Called once per finished run, from worker threads but never concurrently.
using RunSink = std::function<void(const TrajectoryRecord &, const RunSummary &)>;
using FailureSink = std::function<void(const RunFailure &)>;

struct SweepResult {
    /// In plan order.
    std::vector<RunSummary> summaries;
    std::vector<RunFailure> failures;
    bool cancelled{false};
};

/// Runs sharing (instance, p, init, w_max) reuse one pre-training stage.
/// Setting `cancel` stops new work; finished runs are still returned.
[[nodiscard]] SweepResult run_sweep(const SweepSpec &spec, const InstanceProvider &provider,
                                    const RunSink &sink, const FailureSink &on_failure,
                                    const std::atomic<bool> *cancel = nullptr);

[[nodiscard]] ProblemInstance default_instance(Family family, std::size_t n, std::uint64_t seed,
                                               double maxcut_edge_probability);

} // namespace maqaoa
