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
 * @file train.hpp
 * Initialisation, surrogate pre-training, distillation and exact fine-tuning.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "maqaoa/adam.hpp"
#include "maqaoa/ansatz.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/records.hpp"
#include "maqaoa/surrogate.hpp"

namespace maqaoa {

inline constexpr std::size_t kDefaultPretrainSteps = 500;
inline constexpr std::size_t kDefaultFinetuneSteps = 100;

struct StageConfig {
    std::size_t pretrain_steps{kDefaultPretrainSteps};
    std::size_t finetune_steps{kDefaultFinetuneSteps};
    std::size_t w_max{4};
    double distill_threshold{0.0};
    Method method{Method::SafeDistill};
    AdamConfig adam{};
};

/// Starting point for one roster entry. `rng_seed` drives random draws;
/// `relax_objective` is used only by the relaxed annealing start.
[[nodiscard]] ParamSet initialize(const InitSpec &spec,
                                  std::shared_ptr<const AnsatzLayout> layout,
                                  std::uint64_t rng_seed, const Objective &relax_objective,
                                  const AdamConfig &adam);

struct PretrainResult {
    ParamSet initial;
    ParamSet pretrained;
    /// Energy before each update, then the final value.
    std::vector<double> surrogate_energies;
};

/// `steps` Adam updates on the surrogate energy from `start`.
[[nodiscard]] PretrainResult pretrain(SurrogateEvaluator &surrogate, const ParamSet &start,
                                      std::size_t steps, const AdamConfig &adam);

/// Fine-tunes `start` on the exact energy and fills the exact trajectory,
/// final parameters and active counts of `rec`. No updates are taken when
/// nothing is active.
void finetune(const ExactEvaluator &exact, const EnergyExtremes &extremes,
              const ParamSet &start, std::size_t steps, const AdamConfig &adam,
              TrajectoryRecord &rec);

/// Distillation (SafeDistill only) and exact fine-tuning after a finished
/// pre-training stage.
[[nodiscard]] TrajectoryRecord complete_safe(const PretrainResult &pre,
                                             const ExactEvaluator &exact,
                                             const EnergyExtremes &extremes,
                                             const RunIdentity &id, const StageConfig &cfg);

[[nodiscard]] TrajectoryRecord run_exact_only(const ProblemInstance &inst,
                                              std::shared_ptr<const AnsatzLayout> layout,
                                              const InitSpec &init, std::uint64_t init_seed,
                                              const RunIdentity &id, const StageConfig &cfg);

/// Pre-train, optionally distill, fine-tune. `inst` must carry extremes.
[[nodiscard]] TrajectoryRecord run_safe(const ProblemInstance &inst,
                                        std::shared_ptr<const AnsatzLayout> layout,
                                        const InitSpec &init, std::uint64_t init_seed,
                                        const RunIdentity &id, const StageConfig &cfg);

} // namespace maqaoa
