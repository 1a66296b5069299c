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
 * @file rng.hpp
 * Portable counter-based random numbers.
 *
 * Draw k of a stream with seed s is splitmix64(s + (k + 1) * 0x9E3779B97F4A7C15),
 * so every value is a pure function of (seed, counter) and does not depend on
 * the standard library's distribution implementations. Gaussians use the
 * cosine branch of Box-Muller and consume exactly two uniforms per sample.
 */
#pragma once

#include <cstdint>
#include <initializer_list>

namespace maqaoa {

/// splitmix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive 64-bit combination of a seed with one more word.
[[nodiscard]] std::uint64_t hash_combine(std::uint64_t seed,
                                         std::uint64_t value) noexcept;

/// Fold a list of words into a single seed.
[[nodiscard]] std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) noexcept;

class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_{seed} {}

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept;

    /// Normal(mean, stddev^2).
    double normal(double mean = 0.0, double stddev = 1.0) noexcept;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_{0};
};

} // namespace maqaoa
