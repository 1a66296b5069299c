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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dense.hpp"
#include "maqaoa/ansatz.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/rng.hpp"

namespace maqaoa {
namespace {

constexpr double kPi = std::numbers::pi;
using testing::cd;

ProblemInstance single_field() {
    ProblemInstance inst;
    inst.n_qubits = 1;
    inst.local_fields = {1.0};
    return inst;
}

std::vector<cd> to_vector(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

double max_diff(const std::vector<cd> &a, const std::vector<cd> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

TEST(Exact, PlusState) {
    const auto one = prepare_plus(1);
    EXPECT_NEAR(one.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-15);
    const auto two = prepare_plus(2);
    for (auto a : two.amplitudes()) {
        EXPECT_NEAR(a.real(), 0.5, 1e-16);
        EXPECT_EQ(a.imag(), 0.0);
    }
    EXPECT_NEAR(prepare_plus(7).norm(), 1.0, 1e-14);
}

TEST(Exact, RotationsMatchDenseExponentials) {
    CounterRng rng(2);
    for (const auto &p : testing::all_strings(3)) {
        StateVector s(3);
        auto amps = s.amplitudes();
        for (auto &a : amps) {
            a = cd{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        }
        const auto before = to_vector(s);
        const double angle = rng.uniform(-2, 2);
        s.apply_rotation(p, angle);
        EXPECT_LT(max_diff(to_vector(s), testing::apply(testing::rotation(p, angle), before)),
                  1e-14)
            << p.to_string();
        StateVector t(3);
        std::copy(before.begin(), before.end(), t.amplitudes().begin());
        t.apply_pauli(p);
        EXPECT_LT(max_diff(to_vector(t), testing::apply(testing::dense(p), before)), 1e-15);
    }
}

TEST(Exact, NormPreservedAfterEveryGate) {
    const auto inst = generate_sk(8, 4);
    const auto p = init_random_uniform(build_layout(inst, 2), 3);
    StateVector s = prepare_plus(8);
    for (const auto &g : build_gate_sequence(p)) {
        s.apply_rotation(g.generator, p.value(g.param_index));
        EXPECT_NEAR(s.norm(), 1.0, 1e-10);
    }
}

TEST(Exact, ZeroAnglesLeaveThePlusState) {
    const auto inst = generate_grid2d(2, 3, 1);
    const ParamSet p(build_layout(inst, 2));
    const auto s = apply_sequence(prepare_plus(6), build_gate_sequence(p), p);
    EXPECT_LT(max_diff(to_vector(s), to_vector(prepare_plus(6))), 1e-15);
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto i = generate_instance(f, 8, 1);
        const ParamSet z(build_layout(i, 2));
        EXPECT_NEAR(exact_energy(i, build_gate_sequence(z), z), 0.0, 1e-12);
    }
}

TEST(Exact, SingleQubitClosedForm) {
    const auto inst = single_field();
    const auto layout = build_layout(inst, 1);
    for (double g : {0.2, -0.9}) {
        for (double b : {0.5, 1.3}) {
            ParamSet p(layout, {g, b}, {true, true});
            const auto gates = build_gate_sequence(p);
            EXPECT_NEAR(exact_energy(inst, gates, p), std::sin(2 * g) * std::sin(2 * b), 1e-14);
            const auto grad = exact_gradient(inst, gates, p);
            EXPECT_NEAR(grad[0], 2 * std::cos(2 * g) * std::sin(2 * b), 1e-14);
            EXPECT_NEAR(grad[1], 2 * std::sin(2 * g) * std::cos(2 * b), 1e-14);
        }
    }
    ParamSet top(layout, {kPi / 4, kPi / 4}, {true, true});
    const auto grad = exact_gradient(inst, build_gate_sequence(top), top);
    EXPECT_LT(std::hypot(grad[0], grad[1]), 1e-6);
}

TEST(Exact, GlobalPhaseInvariance) {
    const auto inst = generate_sk(6, 2);
    const auto p = init_random_uniform(build_layout(inst, 2), 2);
    ExactEvaluator eval(inst);
    StateVector s = eval.state(build_gate_sequence(p), p);
    const double e = eval.expectation(s);
    for (auto &a : s.amplitudes()) {
        a *= std::polar(1.0, 0.77);
    }
    EXPECT_NEAR(eval.expectation(s), e, 1e-13);
}

TEST(Exact, EnergySandwich) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = with_extremes(generate_instance(f, 8, 3));
        ExactEvaluator eval(inst);
        const auto layout = build_layout(inst, 2);
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto p = init_random_uniform(layout, s);
            const double e = eval.energy(build_gate_sequence(p), p);
            EXPECT_GE(e, inst.extremes->e_min - 1e-12);
            EXPECT_LE(e, inst.extremes->e_max + 1e-12);
        }
    }
}

TEST(Exact, EnergyMatchesDenseExpectation) {
    const auto inst = generate_sk(4, 6);
    const auto p = init_random_uniform(build_layout(inst, 2), 1);
    std::vector<cd> psi = testing::plus_vector(4);
    for (const auto &g : build_gate_sequence(p)) {
        psi = testing::apply(testing::rotation(g.generator, p.value(g.param_index)), psi);
    }
    const double ref = testing::expectation(testing::dense(inst.hamiltonian()), psi).real();
    EXPECT_NEAR(exact_energy(inst, build_gate_sequence(p), p), ref, 1e-13);
}

TEST(Exact, GradientMatchesFiniteDifferences) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 8, 7);
        ParamSet p = init_random_uniform(build_layout(inst, 2), 5);
        p.deactivate(3);
        ExactEvaluator eval(inst);
        const auto gates = build_gate_sequence(p);
        std::vector<double> grad(p.size());
        const double e = eval.energy_and_gradient(gates, p, grad);
        EXPECT_NEAR(e, eval.energy(gates, p), 1e-13);
        EXPECT_EQ(grad[3], 0.0);
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!p.active(i)) {
                continue;
            }
            const double v = p.value(i);
            p.set(i, v + 1e-5);
            const double up = eval.energy(gates, p);
            p.set(i, v - 1e-5);
            const double down = eval.energy(gates, p);
            p.set(i, v);
            const double fd = (up - down) / 2e-5;
            diff = std::max(diff, std::abs(fd - grad[i]));
            scale = std::max(scale, std::abs(fd));
        }
        EXPECT_LT(diff / scale, 1e-4);
    }
}

TEST(Exact, CostGateOrderWithinALayerIsImmaterial) {
    const auto inst = generate_grid2d(2, 4, 3);
    const auto layout = build_layout(inst, 2);
    const auto p = init_random_uniform(layout, 11);
    const auto gates = build_gate_sequence(p);
    auto shuffled = gates;
    const std::size_t m = layout->cost_count();
    for (std::size_t layer = 0; layer < 2; ++layer) {
        auto first = shuffled.begin() + static_cast<std::ptrdiff_t>(layer * layout->layer_size());
        std::reverse(first, first + static_cast<std::ptrdiff_t>(m));
        std::rotate(first, first + 3, first + static_cast<std::ptrdiff_t>(m));
    }
    const auto a = apply_sequence(prepare_plus(8), gates, p);
    const auto b = apply_sequence(prepare_plus(8), shuffled, p);
    EXPECT_LT(max_diff(to_vector(a), to_vector(b)), 1e-12);
}

TEST(Exact, Guard) {
    EXPECT_THROW(StateVector(kExactQubitGuard + 1), GuardError);
    EXPECT_THROW(ExactEvaluator(generate_sk(25, 1)), GuardError);
    const auto inst = generate_sk(4, 1);
    const auto p = init_random_uniform(build_layout(generate_sk(5, 1), 1), 1);
    EXPECT_THROW((void)ExactEvaluator(inst).energy(build_gate_sequence(p), p), DimensionError);
}

} // namespace
} // namespace maqaoa
