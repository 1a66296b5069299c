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
 * @file commands.hpp
 * The generate, run, report and verify commands.
 */
#pragma once

#include <atomic>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "maqaoa/cli/config.hpp"
#include "maqaoa/records.hpp"

namespace maqaoa::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitFailed = 3;

/// <out>/instances/<family>-n<n>-i<index>.json
[[nodiscard]] std::filesystem::path instance_path(const std::filesystem::path &out,
                                                  Family family, std::size_t n,
                                                  std::size_t index);
/// <out>/results/<family>/<n>/<p>/<method>/
[[nodiscard]] std::filesystem::path run_dir(const std::filesystem::path &out,
                                            const RunIdentity &id);

/// Writes every instance of the configured matrix with its extremes.
/// Existing files are rewritten with identical bytes.
int cmd_generate(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Executes the sweep and persists trajectories, checkpoints, runs.jsonl,
/// summary.csv and failures.jsonl. With `dry_run`, prints the plan only.
int cmd_run(const ExperimentConfig &cfg, bool dry_run, std::ostream &out, std::ostream &err,
            const std::atomic<bool> *cancel = nullptr);

/// Reads every summary line under `dir` and writes the aggregated tables to
/// <dir>/report/.
int cmd_report(const std::filesystem::path &dir, std::ostream &out, std::ostream &err);

/// Oracle-equivalence and gradient suites.
int cmd_verify(std::uint64_t seed, std::size_t pairs, std::ostream &out);

/// Summary lines of every trajectory file under `dir`, in path order.
[[nodiscard]] std::vector<RunSummary> collect_summaries(const std::filesystem::path &dir,
                                                        std::ostream &err);

/// Argument parsing and dispatch; returns the process exit code.
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err,
            const std::atomic<bool> *cancel = nullptr);

} // namespace maqaoa::cli
