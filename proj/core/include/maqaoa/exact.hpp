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
 * @file exact.hpp
 * State-vector evaluation of the ma-QAOA energy and its adjoint gradient.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/problems.hpp"

namespace maqaoa {

inline constexpr std::size_t kExactQubitGuard = 24;

class StateVector {
  public:
    using Complex = std::complex<double>;

    StateVector() = default;
    /// |0...0>.
    explicit StateVector(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] double norm() const;

    /// |psi> <- exp(-i * angle * P) |psi>.
    void apply_rotation(const PauliString &generator, double angle);
    /// |psi> <- P |psi>.
    void apply_pauli(const PauliString &p);

    [[nodiscard]] Complex inner(const StateVector &other) const;

  private:
    std::size_t n_qubits_{0};
    std::vector<Complex> amps_;
};

/// All 2^n amplitudes equal to 2^{-n/2}.
[[nodiscard]] StateVector prepare_plus(std::size_t n_qubits);

/// Applies every gate in circuit order.
[[nodiscard]] StateVector apply_sequence(StateVector state, const GateSequence &gates,
                                         const ParamSet &params);

[[nodiscard]] double exact_energy(const ProblemInstance &inst, const GateSequence &gates,
                                  const ParamSet &params);

/// Zeros at inactive indices.
[[nodiscard]] std::vector<double> exact_gradient(const ProblemInstance &inst,
                                                 const GateSequence &gates,
                                                 const ParamSet &params);

/// Caches the diagonal energy table of one instance. Not thread-safe.
class ExactEvaluator {
  public:
    explicit ExactEvaluator(const ProblemInstance &inst);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::span<const double> energies() const noexcept { return table_; }

    [[nodiscard]] StateVector state(const GateSequence &gates, const ParamSet &params) const;
    double energy(const GateSequence &gates, const ParamSet &params) const;
    /// Adjoint sweep; returns the energy.
    double energy_and_gradient(const GateSequence &gates, const ParamSet &params,
                               std::span<double> gradient) const;

    /// <psi|H|psi> for a prepared state.
    [[nodiscard]] double expectation(const StateVector &psi) const;

    /// Objective over the gate sequence implied by each ParamSet. The
    /// returned callable refers to this evaluator.
    [[nodiscard]] Objective objective() const;

  private:
    std::size_t n_qubits_{0};
    std::vector<double> table_;
};

} // namespace maqaoa
