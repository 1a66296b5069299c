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
 * @file dense.hpp
 * Dense 2^n x 2^n reference matrices built from single-qubit Kronecker
 * products, independent of the bitmask algebra under test.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "maqaoa/pauli.hpp"

namespace maqaoa::testing {

using cd = std::complex<double>;

struct Dense {
    std::size_t dim{0};
    std::vector<cd> a;

    explicit Dense(std::size_t d) : dim{d}, a(d * d, cd{0.0, 0.0}) {}
    cd &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    cd operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Dense identity(std::size_t d) {
        Dense m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Dense single(PauliOp op) {
    Dense m(2);
    const cd i{0.0, 1.0};
    switch (op) {
    case PauliOp::I:
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case PauliOp::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case PauliOp::Y:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    case PauliOp::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

/// a (x) b, with b acting on the lower index bits.
inline Dense kron(const Dense &a, const Dense &b) {
    Dense m(a.dim * b.dim);
    for (std::size_t r1 = 0; r1 < a.dim; ++r1) {
        for (std::size_t c1 = 0; c1 < a.dim; ++c1) {
            for (std::size_t r2 = 0; r2 < b.dim; ++r2) {
                for (std::size_t c2 = 0; c2 < b.dim; ++c2) {
                    m(r1 * b.dim + r2, c1 * b.dim + c2) = a(r1, c1) * b(r2, c2);
                }
            }
        }
    }
    return m;
}

/// Qubit 0 is the least significant index bit.
inline Dense dense(const PauliString &p) {
    Dense m = Dense::identity(1);
    for (std::size_t q = p.n_qubits(); q-- > 0;) {
        m = kron(m, single(p.op(q)));
    }
    return m;
}

inline Dense operator*(const Dense &x, const Dense &y) {
    Dense m(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const cd v = x(r, k);
            if (v == cd{}) {
                continue;
            }
            for (std::size_t c = 0; c < x.dim; ++c) {
                m(r, c) += v * y(k, c);
            }
        }
    }
    return m;
}

inline Dense operator+(const Dense &x, const Dense &y) {
    Dense m(x.dim);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        m.a[i] = x.a[i] + y.a[i];
    }
    return m;
}

inline Dense scale(const Dense &x, cd s) {
    Dense m = x;
    for (auto &v : m.a) {
        v *= s;
    }
    return m;
}

inline Dense adjoint(const Dense &x) {
    Dense m(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t c = 0; c < x.dim; ++c) {
            m(c, r) = std::conj(x(r, c));
        }
    }
    return m;
}

inline double max_abs_diff(const Dense &x, const Dense &y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        d = std::max(d, std::abs(x.a[i] - y.a[i]));
    }
    return d;
}

inline Dense dense(const PauliSum &s) {
    const std::size_t d = std::size_t{1} << s.n_qubits();
    Dense m(d);
    for (const auto &[p, c] : s.terms()) {
        m = m + scale(dense(p), c);
    }
    return m;
}

/// exp(-i * angle * P) = cos(angle) I - i sin(angle) P.
inline Dense rotation(const PauliString &p, double angle) {
    const std::size_t d = std::size_t{1} << p.n_qubits();
    return scale(Dense::identity(d), std::cos(angle)) +
           scale(dense(p), cd{0.0, -std::sin(angle)});
}

inline std::vector<cd> apply(const Dense &m, const std::vector<cd> &v) {
    std::vector<cd> out(m.dim, cd{});
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

inline cd expectation(const Dense &m, const std::vector<cd> &v) {
    const auto mv = apply(m, v);
    cd s{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += std::conj(v[i]) * mv[i];
    }
    return s;
}

inline std::vector<cd> plus_vector(std::size_t n) {
    const std::size_t d = std::size_t{1} << n;
    return std::vector<cd>(d, cd{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
}

/// Every Pauli string on n qubits, 4^n of them.
inline std::vector<PauliString> all_strings(std::size_t n) {
    std::vector<PauliString> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
            out.emplace_back(n, x, z);
        }
    }
    return out;
}

} // namespace maqaoa::testing
