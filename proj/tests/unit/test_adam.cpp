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
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "maqaoa/adam.hpp"
#include "maqaoa/ansatz.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/problems.hpp"

namespace maqaoa {
namespace {

std::shared_ptr<const AnsatzLayout> layout() { return build_layout(generate_sk(3, 1), 1); }

TEST(Adam, FirstStepMagnitudeIsLearningRate) {
    ParamSet p(layout());
    AdamState s(p.size(), AdamConfig{});
    std::vector<double> g(p.size(), 0.0);
    g[1] = 3.7;
    g[4] = -0.002;
    s.step(p, g);
    EXPECT_NEAR(p.value(1), -0.02 * 3.7 / (3.7 + 1e-8), 1e-15);
    EXPECT_NEAR(p.value(4), 0.02 * 0.002 / (0.002 + 1e-8), 1e-12);
    EXPECT_EQ(p.value(0), 0.0);
    EXPECT_EQ(s.step_count(), 1u);
}

TEST(Adam, MatchesReferenceRecurrence) {
    ParamSet p(layout());
    const AdamConfig cfg{0.05, 0.8, 0.99, 1e-6};
    AdamState s(p.size(), cfg);
    double x = 0.0;
    double m = 0.0;
    double v = 0.0;
    for (int t = 1; t <= 25; ++t) {
        const double g = std::sin(0.3 * t) + 0.1 * x;
        std::vector<double> grad(p.size(), 0.0);
        grad[0] = g;
        s.step(p, grad);
        m = cfg.beta1 * m + (1 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1 - cfg.beta2) * g * g;
        const double mh = m / (1 - std::pow(cfg.beta1, t));
        const double vh = v / (1 - std::pow(cfg.beta2, t));
        x -= cfg.learning_rate * mh / (std::sqrt(vh) + cfg.epsilon);
        EXPECT_NEAR(p.value(0), x, 1e-14);
    }
}

TEST(Adam, ZeroGradientDecaysMoments) {
    ParamSet p = init_constant(layout(), 0.2);
    AdamState s(p.size(), AdamConfig{});
    std::vector<double> g(p.size(), 1.0);
    s.step(p, g);
    const ParamSet after_one = p;
    const double m0 = s.first_moment()[0];
    std::fill(g.begin(), g.end(), 0.0);
    s.step(p, g);
    EXPECT_NEAR(s.first_moment()[0], 0.9 * m0, 1e-16);
    // The bias-corrected first moment is still nonzero, so values keep moving.
    EXPECT_NE(p.value(0), after_one.value(0));

    ParamSet q = init_constant(layout(), 0.2);
    AdamState fresh(q.size(), AdamConfig{});
    fresh.step(q, g);
    EXPECT_EQ(q, init_constant(layout(), 0.2));
}

TEST(Adam, InactiveEntriesStayZero) {
    ParamSet p = init_constant(layout(), 0.2);
    p.deactivate(2);
    AdamState s(p.size(), AdamConfig{});
    std::vector<double> g(p.size(), 0.5);
    g[2] = 0.0;
    for (int t = 0; t < 50; ++t) {
        s.step(p, g);
    }
    EXPECT_EQ(p.value(2), 0.0);
    EXPECT_EQ(s.first_moment()[2], 0.0);
    EXPECT_EQ(s.second_moment()[2], 0.0);
}

TEST(Adam, RejectsBadGradients) {
    ParamSet p(layout());
    AdamState s(p.size(), AdamConfig{});
    std::vector<double> g(p.size(), 0.0);
    g[0] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(s.step(p, g), NonFiniteGradientError);
    g[0] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(s.step(p, g), NonFiniteGradientError);
    std::vector<double> short_g(p.size() - 1, 0.0);
    EXPECT_THROW(s.step(p, short_g), DimensionError);
}

} // namespace
} // namespace maqaoa
