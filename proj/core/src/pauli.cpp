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
#include "maqaoa/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "maqaoa/errors.hpp"

namespace maqaoa {

namespace {

std::uint64_t qubit_mask(std::size_t n_qubits) {
    return n_qubits >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << n_qubits) - 1;
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("Pauli strings act on " +
                             std::to_string(a.n_qubits()) + " and " +
                             std::to_string(b.n_qubits()) + " qubits");
    }
}

} // namespace

char to_char(PauliOp op) noexcept {
    switch (op) {
    case PauliOp::X:
        return 'X';
    case PauliOp::Y:
        return 'Y';
    case PauliOp::Z:
        return 'Z';
    case PauliOp::I:
        break;
    }
    return 'I';
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_qubits_{n_qubits}, x_{x_mask}, z_{z_mask} {
    if (n_qubits == 0 || n_qubits > kMaxPauliQubits) {
        throw InvalidSizeError("Pauli string qubit count must be in [1, 64], got " +
                               std::to_string(n_qubits));
    }
    const auto mask = qubit_mask(n_qubits);
    if ((x_mask | z_mask) & ~mask) {
        throw DimensionError("Pauli mask addresses a qubit beyond n_qubits");
    }
}

PauliString PauliString::identity(std::size_t n_qubits) {
    return {n_qubits, 0, 0};
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                PauliOp op) {
    return from_ops(n_qubits, {{qubit, op}});
}

PauliString
PauliString::from_ops(std::size_t n_qubits,
                      std::initializer_list<std::pair<std::size_t, PauliOp>> ops) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (const auto &[q, op] : ops) {
        if (q >= n_qubits) {
            throw DimensionError("qubit index " + std::to_string(q) +
                                 " out of range for " +
                                 std::to_string(n_qubits) + " qubits");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        x &= ~bit;
        z &= ~bit;
        if (op == PauliOp::X || op == PauliOp::Y) {
            x |= bit;
        }
        if (op == PauliOp::Z || op == PauliOp::Y) {
            z |= bit;
        }
    }
    return {n_qubits, x, z};
}

PauliString PauliString::parse(std::string_view text, std::size_t n_qubits) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::size_t pos = 0;
    bool saw_identity = false;
    bool saw_factor = false;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        const char c = text[pos++];
        if (c == 'I' && (pos == text.size() ||
                         std::isspace(static_cast<unsigned char>(text[pos])))) {
            saw_identity = true;
            continue;
        }
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError("unexpected character '" + std::string(1, c) +
                             "' in Pauli string \"" + std::string(text) + "\"");
        }
        std::size_t q = 0;
        std::size_t digits = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            q = q * 10 + static_cast<std::size_t>(text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            throw ParseError("missing qubit index in \"" + std::string(text) + "\"");
        }
        if (q >= n_qubits) {
            throw DimensionError("qubit index " + std::to_string(q) +
                                 " out of range in \"" + std::string(text) + "\"");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if ((x | z) & bit) {
            throw ParseError("qubit " + std::to_string(q) + " repeated in \"" +
                             std::string(text) + "\"");
        }
        if (c != 'Z') {
            x |= bit;
        }
        if (c != 'X') {
            z |= bit;
        }
        saw_factor = true;
    }
    if (!saw_factor && !saw_identity) {
        throw ParseError("empty Pauli string");
    }
    if (saw_factor && saw_identity) {
        throw ParseError("identity marker mixed with factors in \"" +
                         std::string(text) + "\"");
    }
    return {n_qubits, x, z};
}

PauliOp PauliString::op(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw DimensionError("qubit index out of range");
    }
    const bool xb = (x_ >> qubit) & 1U;
    const bool zb = (z_ >> qubit) & 1U;
    if (xb && zb) {
        return PauliOp::Y;
    }
    if (xb) {
        return PauliOp::X;
    }
    return zb ? PauliOp::Z : PauliOp::I;
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::string PauliString::to_string() const {
    if (is_identity()) {
        return "I";
    }
    std::string out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        const auto o = op(q);
        if (o == PauliOp::I) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += to_char(o);
        out += std::to_string(q);
    }
    return out;
}

std::complex<double> PhasedPauli::factor() const {
    switch (phase & 3) {
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    case 3:
        return {0.0, -1.0};
    default:
        return {1.0, 0.0};
    }
}

std::size_t weight(const PauliString &p) noexcept { return p.weight(); }

bool commutes(const PauliString &p, const PauliString &g) {
    require_same_size(p, g);
    const auto anti = (p.x_mask() & g.z_mask()) ^ (p.z_mask() & g.x_mask());
    return (std::popcount(anti) & 1) == 0;
}

int product_phase(std::uint64_t px, std::uint64_t pz, std::uint64_t gx,
                  std::uint64_t gz) noexcept {
    // Single-qubit products XY = iZ, YZ = iX, ZX = iY and their reverses.
    const auto p_x = px & ~pz;
    const auto p_y = px & pz;
    const auto p_z = ~px & pz;
    const auto g_x = gx & ~gz;
    const auto g_y = gx & gz;
    const auto g_z = ~gx & gz;
    const auto plus = (p_x & g_y) | (p_y & g_z) | (p_z & g_x);
    const auto minus = (p_y & g_x) | (p_z & g_y) | (p_x & g_z);
    return (std::popcount(plus) - std::popcount(minus)) & 3;
}

PhasedPauli multiply(const PauliString &p, const PauliString &g) {
    require_same_size(p, g);
    return {PauliString{p.n_qubits(), p.x_mask() ^ g.x_mask(),
                        p.z_mask() ^ g.z_mask()},
            product_phase(p.x_mask(), p.z_mask(), g.x_mask(), g.z_mask())};
}

PauliBranch rotation_branch(const PauliString &p, const PauliString &g) {
    auto prod = multiply(p, g);
    const int folded = (prod.phase + 3) & 3; // -i = i^3
    if (folded == 1 || folded == 3) {
        throw LayoutError("rotation branch of commuting strings " +
                          p.to_string() + ", " + g.to_string() +
                          " has an imaginary phase");
    }
    return {prod.string, folded == 0 ? 1.0 : -1.0};
}

void PauliSum::add(const PauliString &string, double coeff) {
    if (n_qubits_ == 0) {
        n_qubits_ = string.n_qubits();
    } else if (string.n_qubits() != n_qubits_) {
        throw DimensionError("term on " + std::to_string(string.n_qubits()) +
                             " qubits added to a sum on " +
                             std::to_string(n_qubits_));
    }
    if (coeff == 0.0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(string, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) {
            terms_.erase(it);
        }
    }
}

double PauliSum::coeff(const PauliString &string) const {
    auto it = terms_.find(string);
    return it == terms_.end() ? 0.0 : it->second;
}

bool PauliSum::is_diagonal() const noexcept {
    for (const auto &[s, c] : terms_) {
        if (!s.is_diagonal()) {
            return false;
        }
    }
    return true;
}

double PauliSum::diagonal_value(std::uint64_t bits) const {
    double total = 0.0;
    for (const auto &[s, c] : terms_) {
        if (!s.is_diagonal()) {
            throw InvalidInstanceError("diagonal_value on non-diagonal term " +
                                       s.to_string());
        }
        total += (std::popcount(s.z_mask() & bits) & 1) ? -c : c;
    }
    return total;
}

std::string PauliSum::to_string() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto &[s, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c << " * [" << s.to_string() << "]";
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

double plus_state_expectation(const PauliSum &sum) {
    double total = 0.0;
    for (const auto &[s, c] : sum.terms()) {
        if (s.z_mask() == 0) {
            total += c;
        }
    }
    return total;
}

} // namespace maqaoa
