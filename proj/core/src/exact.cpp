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
#include "maqaoa/exact.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "maqaoa/errors.hpp"

namespace maqaoa {

namespace {

using Complex = StateVector::Complex;

void check_guard(std::size_t n) {
    if (n == 0 || n > kExactQubitGuard) {
        throw GuardError("exact simulation supports 1.." +
                         std::to_string(kExactQubitGuard) + " qubits, got " +
                         std::to_string(n));
    }
}

/// Phase i^{popcount(x & z)} * (-1)^{popcount(z & b)} picked up by P|b>.
Complex pauli_phase(const PauliString &p, std::uint64_t b) {
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int k = std::popcount(p.x_mask() & p.z_mask());
    // P = prod_q i^{x_q z_q} X^{x_q} Z^{z_q}; Z acts first on |b>.
    k += 2 * (std::popcount(p.z_mask() & b) & 1);
    return kIPow[k & 3];
}

/// <phi| P |psi> without materialising P|psi>.
Complex cross_expectation(const StateVector &phi, const PauliString &p,
                          const StateVector &psi) {
    const auto a = phi.amplitudes();
    const auto b = psi.amplitudes();
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    Complex s{0.0, 0.0};
    if (x == 0) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Complex t = std::conj(a[i]) * b[i];
            s += (std::popcount(z & i) & 1) ? -t : t;
        }
        return s;
    }
    if (z == 0) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            s += std::conj(a[i ^ x]) * b[i];
        }
        return s;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        s += std::conj(a[i ^ x]) * pauli_phase(p, i) * b[i];
    }
    return s;
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_{n_qubits} {
    check_guard(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.n_qubits() != n_qubits_) {
        throw DimensionError("Pauli string and state differ in qubit count");
    }
    std::vector<Complex> out(amps_.size());
    const auto x = p.x_mask();
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        out[b ^ x] = pauli_phase(p, b) * amps_[b];
    }
    amps_ = std::move(out);
}

void StateVector::apply_rotation(const PauliString &g, double angle) {
    if (g.n_qubits() != n_qubits_) {
        throw DimensionError("generator and state differ in qubit count");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const auto x = g.x_mask();
    const auto z = g.z_mask();
    const std::size_t dim = amps_.size();
    if (x == 0) {
        // Diagonal: eigenvalue (-1)^{popcount(z & b)}.
        const Complex plus{c, -s};
        const Complex minus{c, s};
        for (std::size_t b = 0; b < dim; ++b) {
            amps_[b] *= (std::popcount(z & b) & 1) ? minus : plus;
        }
        return;
    }
    if (z == 0 && std::has_single_bit(x)) {
        const Complex mis{0.0, -s};
        for (std::size_t b = 0; b < dim; ++b) {
            if (b & x) {
                continue;
            }
            const Complex a0 = amps_[b];
            const Complex a1 = amps_[b | x];
            amps_[b] = c * a0 + mis * a1;
            amps_[b | x] = mis * a0 + c * a1;
        }
        return;
    }
    // General Pauli word: pairs (b, b ^ x) with P|b> = phase(b) |b ^ x>.
    const std::uint64_t pivot = std::uint64_t{1} << std::countr_zero(x);
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & pivot) {
            continue;
        }
        const std::size_t b2 = b ^ x;
        const Complex a0 = amps_[b];
        const Complex a1 = amps_[b2];
        // (P psi)[b2] = phase(b) a0, (P psi)[b] = phase(b2) a1.
        const Complex pa1 = pauli_phase(g, b2) * a1;
        const Complex pa0 = pauli_phase(g, b) * a0;
        amps_[b] = c * a0 + Complex{0.0, -s} * pa1;
        amps_[b2] = c * a1 + Complex{0.0, -s} * pa0;
    }
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.size() != size()) {
        throw DimensionError("inner product of states with different sizes");
    }
    Complex s{0.0, 0.0};
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        s += std::conj(amps_[b]) * other.amps_[b];
    }
    return s;
}

StateVector prepare_plus(std::size_t n_qubits) {
    StateVector psi(n_qubits);
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n_qubits));
    for (auto &amp : psi.amplitudes()) {
        amp = a;
    }
    return psi;
}

StateVector apply_sequence(StateVector state, const GateSequence &gates,
                           const ParamSet &params) {
    if (params.layout().n_qubits != state.n_qubits()) {
        throw DimensionError("state and parameter layout differ in qubit count");
    }
    validate_gates(gates, params);
    for (const auto &g : gates) {
        state.apply_rotation(g.generator, params.value(g.param_index));
    }
    return state;
}

ExactEvaluator::ExactEvaluator(const ProblemInstance &inst) : n_qubits_{inst.n_qubits} {
    check_guard(n_qubits_);
    table_ = energy_table(inst);
}

StateVector ExactEvaluator::state(const GateSequence &gates, const ParamSet &params) const {
    if (params.layout().n_qubits != n_qubits_) {
        throw DimensionError("parameter layout and instance differ in qubit count");
    }
    return apply_sequence(prepare_plus(n_qubits_), gates, params);
}

double ExactEvaluator::expectation(const StateVector &psi) const {
    if (psi.size() != table_.size()) {
        throw DimensionError("state size differs from energy table");
    }
    double e = 0.0;
    const auto amps = psi.amplitudes();
    for (std::size_t b = 0; b < table_.size(); ++b) {
        e += std::norm(amps[b]) * table_[b];
    }
    return e;
}

double ExactEvaluator::energy(const GateSequence &gates, const ParamSet &params) const {
    return expectation(state(gates, params));
}

double ExactEvaluator::energy_and_gradient(const GateSequence &gates,
                                           const ParamSet &params,
                                           std::span<double> gradient) const {
    if (gradient.size() != params.size()) {
        throw DimensionError("gradient buffer length differs from parameter count");
    }
    std::fill(gradient.begin(), gradient.end(), 0.0);
    StateVector psi = state(gates, params);
    const double value = expectation(psi);

    // phi = H psi, then both states are un-computed gate by gate:
    // dE/dtheta_k = 2 Im <phi_k| G_k |psi_k>.
    StateVector phi = psi;
    {
        auto amps = phi.amplitudes();
        for (std::size_t b = 0; b < table_.size(); ++b) {
            amps[b] *= table_[b];
        }
    }
    for (std::size_t k = gates.size(); k-- > 0;) {
        const auto &g = gates[k];
        gradient[g.param_index] = 2.0 * cross_expectation(phi, g.generator, psi).imag();
        const double angle = params.value(g.param_index);
        psi.apply_rotation(g.generator, -angle);
        phi.apply_rotation(g.generator, -angle);
    }
    return value;
}

Objective ExactEvaluator::objective() const {
    return [this](const ParamSet &params, std::span<double> gradient) {
        return energy_and_gradient(build_gate_sequence(params), params, gradient);
    };
}

double exact_energy(const ProblemInstance &inst, const GateSequence &gates,
                    const ParamSet &params) {
    return ExactEvaluator(inst).energy(gates, params);
}

std::vector<double> exact_gradient(const ProblemInstance &inst, const GateSequence &gates,
                                   const ParamSet &params) {
    std::vector<double> grad(params.size(), 0.0);
    (void)ExactEvaluator(inst).energy_and_gradient(gates, params, grad);
    return grad;
}

} // namespace maqaoa
