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
 * @file config.hpp
 * Experiment configuration: JSON file plus command-line overrides.
 */
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "maqaoa/sweep.hpp"

namespace maqaoa::cli {

struct ExperimentConfig {
    SweepSpec sweep;
    /// Roster ids selected from the standard initialisation set.
    std::vector<int> init_ids{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::size_t relax_steps{kDefaultRelaxSteps};
    std::filesystem::path output_dir{"results"};
    /// 0 selects the number of logical cores.
    std::size_t workers{0};

    /// Rebuilds sweep.inits and sweep.workers from the fields above.
    void finalize();
};

/// The full experiment matrix with every budget at its published value.
[[nodiscard]] ExperimentConfig default_config();

/// Keys absent from the document keep their defaults; unknown keys and
/// malformed values throw ParseError.
[[nodiscard]] ExperimentConfig config_from_json(std::string_view text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);
[[nodiscard]] std::string to_json(const ExperimentConfig &cfg);

} // namespace maqaoa::cli
