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
#include "maqaoa/adam.hpp"

#include <cmath>
#include <string>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/errors.hpp"

namespace maqaoa {

AdamState::AdamState(std::size_t dimension, AdamConfig config)
    : config_{config}, m_(dimension, 0.0), v_(dimension, 0.0) {}

void AdamState::step(ParamSet &params, std::span<const double> gradient) {
    if (gradient.size() != params.size() || m_.size() != params.size()) {
        throw DimensionError("Adam step: gradient, moments and parameters differ in length");
    }
    for (std::size_t i = 0; i < gradient.size(); ++i) {
        if (!std::isfinite(gradient[i])) {
            throw NonFiniteGradientError("non-finite gradient at parameter " +
                                         std::to_string(i));
        }
    }
    ++step_count_;
    const auto t = static_cast<double>(step_count_);
    const double bc1 = 1.0 - std::pow(config_.beta1, t);
    const double bc2 = 1.0 - std::pow(config_.beta2, t);
    auto values = params.mutable_values();
    const auto &mask = params.active_mask();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!mask[i]) {
            continue;
        }
        const double g = gradient[i];
        m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * g;
        v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * g * g;
        const double m_hat = m_[i] / bc1;
        const double v_hat = v_[i] / bc2;
        values[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
}

} // namespace maqaoa
