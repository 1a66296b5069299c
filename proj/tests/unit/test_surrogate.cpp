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
#include <numbers>

#include "dense.hpp"
#include "maqaoa/ansatz.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/surrogate.hpp"

namespace maqaoa {
namespace {

constexpr double kPi = std::numbers::pi;

PauliString ps(std::string_view text, std::size_t n) { return PauliString::parse(text, n); }

ProblemInstance single_field() {
    ProblemInstance inst;
    inst.n_qubits = 1;
    inst.local_fields = {1.0};
    return inst;
}

/// Cost Z0 Z2 then mixers X0, X1, X2 on three qubits; X1 and X2 frozen, so
/// the circuit is R(Z0 Z2) followed by R(X0).
struct WorkedExample {
    std::shared_ptr<AnsatzLayout> layout = std::make_shared<AnsatzLayout>();
    ParamSet params;

    WorkedExample(double theta_x, double theta_zz) : params(make_layout(layout)) {
        params.set(0, theta_zz);
        params.set(1, theta_x);
        params.deactivate(2);
        params.deactivate(3);
    }

    static std::shared_ptr<const AnsatzLayout> make_layout(std::shared_ptr<AnsatzLayout> &l) {
        l->n_qubits = 3;
        l->depth = 1;
        l->cost_terms = {{ps("Z0 Z2", 3), 1.0}};
        l->mixer_terms = {ps("X0", 3), ps("X1", 3), ps("X2", 3)};
        return l;
    }
};

TEST(Surrogate, WorkedTruncationExample) {
    const double gx = 0.3;
    const double gzz = 0.2;
    WorkedExample ex(gx, gzz);
    PauliSum obs(3);
    obs.add(ps("Z0 Z1", 3), 1.0);
    const auto gates = build_gate_sequence(ex.params);
    ASSERT_EQ(gates.size(), 2u);
    PropagationTrace trace;
    const auto out = propagate(obs, gates, ex.params, PropagationConfig{.w_max = 2}, &trace);

    EXPECT_EQ(out.size(), 2u);
    EXPECT_NEAR(out.coeff(ps("Z0 Z1", 3)), std::cos(2 * gx), 1e-15);
    EXPECT_NEAR(out.coeff(ps("Y0 Z1", 3)), std::cos(2 * gzz) * std::sin(2 * gx), 1e-15);
    EXPECT_FALSE(out.contains(ps("X0 Z1 Z2", 3)));

    ASSERT_EQ(trace.rows.size(), 2u);
    EXPECT_EQ(trace.rows[0].param_index, 1u);
    EXPECT_EQ(trace.rows[0].created, 1u);
    EXPECT_EQ(trace.rows[0].discarded, 0u);
    EXPECT_EQ(trace.rows[1].param_index, 0u);
    EXPECT_EQ(trace.rows[1].created, 0u);
    EXPECT_EQ(trace.rows[1].discarded, 1u);
    EXPECT_EQ(trace.max_weight(), 2u);

    // Without truncation the weight-3 branch survives.
    const auto full = propagate(obs, gates, ex.params, PropagationConfig{.w_max = 3});
    EXPECT_NEAR(full.coeff(ps("X0 Z1 Z2", 3)), std::sin(2 * gzz) * std::sin(2 * gx), 1e-15);
}

TEST(Surrogate, CommutingGatesLeaveTheObservable) {
    const auto inst = generate_grid2d(2, 3, 4);
    const auto layout = build_layout(inst, 2);
    ParamSet p = init_random_uniform(layout, 3);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!layout->is_cost_index(i)) {
            p.deactivate(i);
        }
    }
    const auto h = inst.hamiltonian();
    EXPECT_EQ(propagate(h, build_gate_sequence(p), p, PropagationConfig{.w_max = 2}), h);
}

TEST(Surrogate, SingleQubitClosedForm) {
    const auto inst = single_field();
    const auto layout = build_layout(inst, 1);
    const PropagationConfig cfg{.w_max = 1};
    for (double g : {0.1, 0.7, kPi / 4}) {
        for (double b : {-0.4, 0.3, kPi / 4}) {
            ParamSet p(layout, {g, b}, {true, true});
            const auto gates = build_gate_sequence(p);
            EXPECT_NEAR(surrogate_energy(inst, gates, p, cfg), std::sin(2 * g) * std::sin(2 * b),
                        1e-14);
            const auto grad = surrogate_gradient(inst, gates, p, cfg);
            EXPECT_NEAR(grad[0], 2 * std::cos(2 * g) * std::sin(2 * b), 1e-14);
            EXPECT_NEAR(grad[1], 2 * std::sin(2 * g) * std::cos(2 * b), 1e-14);
        }
    }
    ParamSet top(layout, {kPi / 4, kPi / 4}, {true, true});
    EXPECT_NEAR(surrogate_energy(inst, build_gate_sequence(top), top, cfg), 1.0, 1e-15);
}

TEST(Surrogate, ZeroAnglesGivePlusStateValue) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 8, 2);
        ParamSet p(build_layout(inst, 2));
        EXPECT_EQ(surrogate_energy(inst, build_gate_sequence(p), p, PropagationConfig{.w_max = 3}),
                  0.0);
    }
}

TEST(Surrogate, LowestTruncationIsFinite) {
    const auto inst = generate_sk(8, 3);
    const auto p = init_random_uniform(build_layout(inst, 2), 1);
    const auto gates = build_gate_sequence(p);
    const PropagationConfig cfg{.w_max = 1};
    EXPECT_TRUE(std::isfinite(surrogate_energy(inst, gates, p, cfg)));
    for (double g : surrogate_gradient(inst, gates, p, cfg)) {
        EXPECT_TRUE(std::isfinite(g));
    }
}

TEST(Surrogate, HeavyObservableTermsAreDropped) {
    PauliSum obs(4);
    obs.add(ps("X0 X1 X2", 4), 2.0);
    obs.add(ps("X3", 4), 0.5);
    const auto layout = build_layout(generate_sk(4, 1), 1);
    const ParamSet p(layout);
    SurrogateEvaluator two(obs, PropagationConfig{.w_max = 2});
    EXPECT_EQ(two.energy(build_gate_sequence(p), p), 0.5);
    SurrogateEvaluator three(obs, PropagationConfig{.w_max = 3});
    EXPECT_EQ(three.energy(build_gate_sequence(p), p), 2.5);
}

TEST(Surrogate, TrackedCountBound) {
    EXPECT_EQ(tracked_count_bound(12, 3), 6571u);
    EXPECT_EQ(tracked_count_bound(12, 4), 46666u);
    EXPECT_EQ(tracked_count_bound(20, 4), 424996u);
    EXPECT_EQ(tracked_count_bound(7, 0), 1u);
    EXPECT_EQ(tracked_count_bound(5, 5), 1024u);
    EXPECT_THROW((void)tracked_count_bound(3, 4), ParameterError);
}

TEST(Surrogate, TruncationSoundness) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 10, 6);
        const auto p = init_random_uniform(build_layout(inst, 2), 2);
        for (std::size_t w : {2u, 3u}) {
            PropagationTrace trace;
            (void)propagate(inst.hamiltonian(), build_gate_sequence(p), p,
                            PropagationConfig{.w_max = w}, &trace);
            EXPECT_LE(trace.max_tracked(), tracked_count_bound(10, w));
            EXPECT_LE(trace.max_weight(), w);
        }
    }
}

// U^dagger O U from dense unitaries equals the propagated operator.
TEST(Surrogate, DenseConjugationCoherence) {
    using namespace testing;
    for (std::size_t n : {2u, 3u}) {
        for (auto f : {Family::SK, Family::MaxCut, Family::Grid2D}) {
            if (f == Family::Grid2D && n < 4) {
                continue;
            }
            const auto inst = generate_instance(f, n, 5);
            const auto p = init_random_uniform(build_layout(inst, 2), 8);
            const auto gates = build_gate_sequence(p);
            Dense u = Dense::identity(std::size_t{1} << n);
            for (const auto &g : gates) {
                u = rotation(g.generator, p.value(g.param_index)) * u;
            }
            const auto h = inst.hamiltonian();
            const Dense ref = adjoint(u) * dense(h) * u;
            const auto out = propagate(h, gates, p, PropagationConfig{.w_max = n});
            EXPECT_LT(max_abs_diff(dense(out), ref), 1e-12);
        }
    }
}

TEST(Surrogate, UntruncatedMatchesExactOnSixQubits) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 6, 13);
        const auto p = init_random_uniform(build_layout(inst, 3), 4);
        const auto gates = build_gate_sequence(p);
        EXPECT_NEAR(surrogate_energy(inst, gates, p, PropagationConfig{.w_max = 6}),
                    exact_energy(inst, gates, p), 1e-9);
    }
}

double max_rel_fd_error(const ProblemInstance &inst, ParamSet p, const PropagationConfig &cfg) {
    SurrogateEvaluator eval(inst.hamiltonian(), cfg);
    const auto gates = build_gate_sequence(p);
    std::vector<double> grad(p.size());
    (void)eval.energy_and_gradient(gates, p, grad);
    double diff = 0.0;
    double scale = 0.0;
    const double h = 1e-5;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p.active(i)) {
            EXPECT_EQ(grad[i], 0.0);
            continue;
        }
        const double v = p.value(i);
        p.set(i, v + h);
        const double up = eval.energy(gates, p);
        p.set(i, v - h);
        const double down = eval.energy(gates, p);
        p.set(i, v);
        diff = std::max(diff, std::abs(grad[i] - (up - down) / (2 * h)));
        scale = std::max(scale, std::abs((up - down) / (2 * h)));
    }
    return diff / scale;
}

TEST(Surrogate, GradientMatchesFiniteDifferences) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 6, 3);
        ParamSet p = init_random_uniform(build_layout(inst, 2), 9);
        p.deactivate(1);
        p.deactivate(p.size() - 1);
        EXPECT_LT(max_rel_fd_error(inst, p, PropagationConfig{.w_max = 3}), 1e-4);
    }
}

TEST(Surrogate, CheckpointedGradientMatchesTape) {
    const auto inst = generate_sk(8, 2);
    const auto p = init_random_uniform(build_layout(inst, 2), 6);
    const auto gates = build_gate_sequence(p);
    SurrogateEvaluator tape(inst.hamiltonian(), PropagationConfig{.w_max = 3});
    SurrogateEvaluator replay(inst.hamiltonian(),
                              PropagationConfig{.w_max = 3, .tape_budget_bytes = 0});
    std::vector<double> a(p.size());
    std::vector<double> b(p.size());
    const double ea = tape.energy_and_gradient(gates, p, a);
    const double eb = replay.energy_and_gradient(gates, p, b);
    EXPECT_EQ(ea, eb);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i], b[i], 1e-13);
    }
    // Repeated calls reuse buffers without drift.
    std::vector<double> c(p.size());
    EXPECT_EQ(replay.energy_and_gradient(gates, p, c), eb);
    EXPECT_EQ(b, c);
}

TEST(Surrogate, ConfigValidation) {
    const auto h = generate_sk(4, 1).hamiltonian();
    EXPECT_THROW(SurrogateEvaluator(h, PropagationConfig{.w_max = 0}), ParameterError);
    EXPECT_THROW(SurrogateEvaluator(h, PropagationConfig{.w_max = 5}), ParameterError);
    EXPECT_THROW(SurrogateEvaluator(h, PropagationConfig{.w_max = 2, .coeff_floor = -1.0}),
                 ParameterError);
    PauliSum big(40);
    big.add(PauliString::single(40, 0, PauliOp::Z), 1.0);
    EXPECT_THROW(SurrogateEvaluator(big, PropagationConfig{.w_max = 2}), InvalidSizeError);
}

TEST(Surrogate, CoefficientFloorPrunes) {
    const auto inst = generate_sk(8, 2);
    const auto p = init_random_uniform(build_layout(inst, 2), 1);
    const auto gates = build_gate_sequence(p);
    PropagationTrace plain;
    PropagationTrace pruned;
    (void)propagate(inst.hamiltonian(), gates, p, PropagationConfig{.w_max = 4}, &plain);
    (void)propagate(inst.hamiltonian(), gates, p,
                    PropagationConfig{.w_max = 4, .coeff_floor = 1e-3}, &pruned);
    EXPECT_LT(pruned.max_tracked(), plain.max_tracked());
}

TEST(Surrogate, TraceCsv) {
    WorkedExample ex(0.3, 0.2);
    PauliSum obs(3);
    obs.add(ps("Z0 Z1", 3), 1.0);
    PropagationTrace trace;
    (void)propagate(obs, build_gate_sequence(ex.params), ex.params,
                    PropagationConfig{.w_max = 2}, &trace);
    std::ostringstream os;
    trace.write_csv(os);
    EXPECT_EQ(os.str(), "step,gate,param_index,tracked,created,discarded,max_weight\n"
                        "0,1,1,2,1,0,2\n"
                        "1,0,0,2,0,1,2\n");
}

} // namespace
} // namespace maqaoa
