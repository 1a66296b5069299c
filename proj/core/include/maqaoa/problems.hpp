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
 * @file problems.hpp
 * Ising instance generators (SK, 2D square-lattice spin glass, Max-Cut) and
 * the brute-force energy oracle.
 *
 * H = sum_i h_i Z_i + sum_{(i,j)} J_ij Z_i Z_j with Z eigenvalue +1 for bit 0
 * and -1 for bit 1. Randomness comes from CounterRng; draws are taken fields
 * first (by qubit index), then couplings in lexicographic edge order.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maqaoa/pauli.hpp"

namespace maqaoa {

enum class Family { SK, Grid2D, MaxCut };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
/// Accepts "sk", "grid", "grid2d", "maxcut" (case-insensitive).
[[nodiscard]] Family parse_family(std::string_view text);

inline constexpr std::size_t kMinInstanceQubits = 2;
inline constexpr std::size_t kMaxInstanceQubits = 30;
inline constexpr std::size_t kBruteForceGuard = 30;

struct Edge {
    std::size_t i{0};
    std::size_t j{0};
    double coupling{0.0};

    friend bool operator==(const Edge &, const Edge &) = default;
};

struct EnergyExtremes {
    double e_min{0.0};
    double e_max{0.0};
    /// Lowest-index configuration attaining e_min.
    std::uint64_t argmin{0};
    std::uint64_t argmax{0};

    friend bool operator==(const EnergyExtremes &, const EnergyExtremes &) = default;
};

/// Render a configuration most-significant qubit first ("01" = qubit 0 set).
[[nodiscard]] std::string bitstring(std::uint64_t bits, std::size_t n_qubits);

struct ProblemInstance {
    Family family{Family::SK};
    std::size_t n_qubits{0};
    std::uint64_t seed{0};
    std::optional<std::pair<std::size_t, std::size_t>> grid_shape;
    /// h_i for every qubit; zeros mean "no field term".
    std::vector<double> local_fields;
    /// Sorted lexicographically, i < j.
    std::vector<Edge> edges;
    /// Max-Cut regenerations forced by isolated vertices.
    std::size_t resample_count{0};
    std::optional<EnergyExtremes> extremes;

    [[nodiscard]] std::size_t field_term_count() const noexcept;

    /// Cost terms in circuit order: nonzero fields by qubit, then edges.
    [[nodiscard]] std::vector<WeightedPauli> cost_terms() const;
    [[nodiscard]] PauliSum hamiltonian() const;

    /// Direct h/J evaluation.
    [[nodiscard]] double energy(std::uint64_t bits) const;

    friend bool operator==(const ProblemInstance &, const ProblemInstance &) = default;
};

[[nodiscard]] ProblemInstance generate_sk(std::size_t n, std::uint64_t seed);
[[nodiscard]] ProblemInstance generate_grid2d(std::size_t rows, std::size_t cols,
                                              std::uint64_t seed);
[[nodiscard]] ProblemInstance generate_maxcut(std::size_t n, double edge_prob,
                                              std::uint64_t seed);

/// Grid shape used for a requested qubit count (12 -> 3x4, 16 -> 4x4,
/// 20 -> 4x5); otherwise the most square factorisation with rows <= cols.
[[nodiscard]] std::pair<std::size_t, std::size_t> grid_shape_for(std::size_t n);

/// Family-dispatching generator used by the sweep and the CLI.
[[nodiscard]] ProblemInstance generate_instance(Family family, std::size_t n,
                                                std::uint64_t seed,
                                                double maxcut_edge_prob = 0.3);

/// Exhaustive min/max over all 2^n configurations. The sweep may be split
/// across `workers` threads; the result does not depend on the split.
[[nodiscard]] EnergyExtremes brute_force_extremes(const ProblemInstance &inst,
                                                  unsigned workers = 1);

/// Returns a copy of inst with extremes filled in.
[[nodiscard]] ProblemInstance with_extremes(ProblemInstance inst,
                                            unsigned workers = 1);

/// Classical energy of every configuration, indexed by bitstring.
[[nodiscard]] std::vector<double> energy_table(const ProblemInstance &inst);

/// Max-Cut cut size of a configuration.
[[nodiscard]] std::size_t cut_value(const ProblemInstance &inst, std::uint64_t bits);

[[nodiscard]] std::string to_json(const ProblemInstance &inst);
[[nodiscard]] ProblemInstance instance_from_json(std::string_view text);

} // namespace maqaoa
