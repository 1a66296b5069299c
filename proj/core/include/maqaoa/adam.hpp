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
 * @file adam.hpp
 * Adam with bias correction over a masked parameter vector.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace maqaoa {

class ParamSet;

struct AdamConfig {
    double learning_rate{0.02};
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};
};

class AdamState {
  public:
    AdamState() = default;
    AdamState(std::size_t dimension, AdamConfig config);

    /// One update of every active entry of `params`. Inactive entries keep
    /// value 0 and zero moments. Throws NonFiniteGradientError on NaN/inf.
    void step(ParamSet &params, std::span<const double> gradient);

    [[nodiscard]] const AdamConfig &config() const noexcept { return config_; }
    [[nodiscard]] std::size_t step_count() const noexcept { return step_count_; }
    [[nodiscard]] std::span<const double> first_moment() const noexcept { return m_; }
    [[nodiscard]] std::span<const double> second_moment() const noexcept { return v_; }

  private:
    AdamConfig config_{};
    std::vector<double> m_;
    std::vector<double> v_;
    std::size_t step_count_{0};
};

} // namespace maqaoa
