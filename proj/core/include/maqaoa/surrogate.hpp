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
 * @file surrogate.hpp
 * Low-weight Pauli propagation (LWPP): Heisenberg-picture evolution of the
 * cost Hamiltonian through the ma-QAOA circuit, discarding every Pauli
 * string whose weight exceeds w_max.
 *
 * A gate exp(-i*gamma*G) maps an anticommuting string P with coefficient c
 * to cos(2 gamma) c P + sin(2 gamma) c P', P' = -i P G; commuting strings
 * pass through. Gates are applied from the last circuit gate to the first.
 *
 * Gradients are exact for the truncated objective. Truncation is a fixed
 * linear projection, so the surrogate energy is <rho, T_1 ... T_K O> with
 * linear per-gate maps T_k; the gradient is obtained by pushing the
 * |+>-expectation functional rho forward through the transposed maps while
 * the operator side is replayed from sqrt(K) checkpoints.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/pauli.hpp"
#include "maqaoa/problems.hpp"

namespace maqaoa {

/// The propagation engine packs strings into one 64-bit word.
inline constexpr std::size_t kMaxPropagationQubits = 32;

struct PropagationConfig {
    std::size_t w_max{4};
    /// Strings with |coeff| below this are pruned after each gate; 0 disables.
    /// Gradients ignore the prune, so keep it at 0 when training.
    double coeff_floor{0.0};
    /// Memory allowed for the gradient tape of one forward sweep. Above it
    /// the gradient replays segments from sqrt(K) checkpoints instead.
    std::size_t tape_budget_bytes{std::size_t{256} << 20U};
};

struct GateTraceRow {
    /// Position in circuit order.
    std::size_t gate{0};
    std::size_t param_index{0};
    /// Distinct tracked strings after the gate was applied.
    std::size_t tracked{0};
    std::size_t created{0};
    std::size_t discarded{0};
    std::size_t max_weight{0};
};

/// Rows in application order (last circuit gate first).
struct PropagationTrace {
    std::vector<GateTraceRow> rows;

    [[nodiscard]] std::size_t max_tracked() const noexcept;
    [[nodiscard]] std::size_t max_weight() const noexcept;
    void write_csv(std::ostream &os) const;
};

/// sum_{r=0}^{w_max} C(n, r) 3^r.
[[nodiscard]] std::uint64_t tracked_count_bound(std::size_t n, std::size_t w_max);

/// Propagated observable. Input terms heavier than w_max are dropped.
[[nodiscard]] PauliSum propagate(const PauliSum &observable, const GateSequence &gates,
                                 const ParamSet &params, const PropagationConfig &cfg,
                                 PropagationTrace *trace = nullptr);

[[nodiscard]] double surrogate_energy(const ProblemInstance &inst,
                                      const GateSequence &gates, const ParamSet &params,
                                      const PropagationConfig &cfg);

/// Zeros at inactive indices.
[[nodiscard]] std::vector<double> surrogate_gradient(const ProblemInstance &inst,
                                                     const GateSequence &gates,
                                                     const ParamSet &params,
                                                     const PropagationConfig &cfg);

/// Reusable evaluator for one observable. Holds scratch tables, so a single
/// instance must not be shared between threads.
class SurrogateEvaluator {
  public:
    SurrogateEvaluator(const PauliSum &observable, PropagationConfig cfg);
    ~SurrogateEvaluator();
    SurrogateEvaluator(SurrogateEvaluator &&) noexcept;
    SurrogateEvaluator &operator=(SurrogateEvaluator &&) noexcept;

    [[nodiscard]] const PropagationConfig &config() const noexcept;

    double energy(const GateSequence &gates, const ParamSet &params,
                  PropagationTrace *trace = nullptr);

    /// Fills `gradient` (length params.size()) and returns the energy.
    double energy_and_gradient(const GateSequence &gates, const ParamSet &params,
                               std::span<double> gradient);

    /// Operator left behind by the most recent energy() call.
    [[nodiscard]] PauliSum propagated_operator() const;

    /// Objective over the gate sequence implied by each ParamSet. The
    /// returned callable refers to this evaluator.
    [[nodiscard]] Objective objective();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace maqaoa
