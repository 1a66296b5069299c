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
 * @file pauli.hpp
 * Sparse Pauli-string algebra in the (x, z) symplectic bitmask encoding.
 *
 * Qubit q carries X if only x bit q is set, Z if only z bit q is set and Y if
 * both are set; Y is the Hermitian operator i*X*Z. Qubit 0 is the least
 * significant bit, matching the state-vector index convention.
 */
#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace maqaoa {

inline constexpr std::size_t kMaxPauliQubits = 64;

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliOp op) noexcept;

class PauliString {
  public:
    PauliString() = default;
    PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    static PauliString identity(std::size_t n_qubits);
    static PauliString single(std::size_t n_qubits, std::size_t qubit, PauliOp op);
    static PauliString
    from_ops(std::size_t n_qubits,
             std::initializer_list<std::pair<std::size_t, PauliOp>> ops);

    /// Inverse of to_string(): "X0 Y1 Z2", "I" for the identity.
    static PauliString parse(std::string_view text, std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
    [[nodiscard]] std::uint64_t support() const noexcept { return x_ | z_; }

    [[nodiscard]] PauliOp op(std::size_t qubit) const;
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool is_identity() const noexcept { return (x_ | z_) == 0; }
    /// Built from I and Z only.
    [[nodiscard]] bool is_diagonal() const noexcept { return x_ == 0; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend std::strong_ordering operator<=>(const PauliString &a,
                                            const PauliString &b) noexcept {
        if (auto c = a.n_qubits_ <=> b.n_qubits_; c != 0) {
            return c;
        }
        if (auto c = a.z_ <=> b.z_; c != 0) {
            return c;
        }
        return a.x_ <=> b.x_;
    }

  private:
    std::size_t n_qubits_{0};
    std::uint64_t x_{0};
    std::uint64_t z_{0};
};

/// Product P*G = i^phase * string, phase in {0, 1, 2, 3}.
struct PhasedPauli {
    PauliString string;
    int phase{0};

    [[nodiscard]] std::complex<double> factor() const;
};

/// Signed branch string for an anticommuting pair: -i*P*G = sign * string.
struct PauliBranch {
    PauliString string;
    double sign{1.0};
};

[[nodiscard]] std::size_t weight(const PauliString &p) noexcept;

[[nodiscard]] bool commutes(const PauliString &p, const PauliString &g);

[[nodiscard]] PhasedPauli multiply(const PauliString &p, const PauliString &g);

/// -i*P*G for anticommuting P, G. Throws LayoutError if they commute (the
/// product would carry an imaginary phase).
[[nodiscard]] PauliBranch rotation_branch(const PauliString &p,
                                          const PauliString &g);

/// Phase exponent of P*G computed on raw masks; shared with the propagation
/// engine.
[[nodiscard]] int product_phase(std::uint64_t px, std::uint64_t pz,
                                std::uint64_t gx, std::uint64_t gz) noexcept;

struct WeightedPauli {
    PauliString string;
    double coeff{0.0};
};

/// Real linear combination of Pauli strings on a fixed qubit count.
class PauliSum {
  public:
    using TermMap = std::map<PauliString, double>;

    PauliSum() = default;
    explicit PauliSum(std::size_t n_qubits) : n_qubits_{n_qubits} {}

    /// Accumulates coeff onto string; drops the entry if it becomes exactly 0.
    void add(const PauliString &string, double coeff);
    void add(const WeightedPauli &term) { add(term.string, term.coeff); }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] const TermMap &terms() const noexcept { return terms_; }
    [[nodiscard]] double coeff(const PauliString &string) const;
    [[nodiscard]] bool contains(const PauliString &string) const {
        return terms_.contains(string);
    }

    /// True iff every term is a product of I and Z.
    [[nodiscard]] bool is_diagonal() const noexcept;

    /// Classical value on a computational basis state (diagonal sums only).
    /// Bit q of `bits` = 0 gives Z_q eigenvalue +1, bit 1 gives -1.
    [[nodiscard]] double diagonal_value(std::uint64_t bits) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliSum &, const PauliSum &) = default;

  private:
    std::size_t n_qubits_{0};
    TermMap terms_;
};

/// <+|^n O |+>^n: only I/X strings survive, each with value 1.
[[nodiscard]] double plus_state_expectation(const PauliSum &sum);

} // namespace maqaoa
