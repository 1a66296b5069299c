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
 * @file verify.hpp
 * Engine self-checks: surrogate/exact equivalence and finite-difference
 * gradient agreement.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace maqaoa::cli {

struct CheckResult {
    std::string name;
    bool passed{false};
    std::size_t cases{0};
    /// Largest observed error (absolute or relative, see the check).
    double worst{0.0};
    double tolerance{0.0};
    double seconds{0.0};
};

/// Surrogate energy with w_max = n against the state-vector energy for
/// `pairs` random (instance, parameter) pairs per family and size.
[[nodiscard]] CheckResult check_oracle_equivalence(std::uint64_t seed, std::size_t pairs = 20,
                                                   double tolerance = 1e-9);

enum class Engine { Surrogate, Exact };

/// Analytic gradient against central differences at `points` random points,
/// n = 8, p = 2; the surrogate runs truncated at w_max = 4. Reports
/// max |g - fd| / max |fd| per point.
[[nodiscard]] CheckResult check_gradients(Engine engine, std::uint64_t seed,
                                          std::size_t points = 10, double step = 1e-5,
                                          double tolerance = 1e-4);

[[nodiscard]] std::string format(const CheckResult &r);

} // namespace maqaoa::cli
