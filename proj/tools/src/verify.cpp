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
#include "maqaoa/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/rng.hpp"
#include "maqaoa/surrogate.hpp"

namespace maqaoa::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr Family kFamilies[] = {Family::SK, Family::Grid2D, Family::MaxCut};

} // namespace

CheckResult check_oracle_equivalence(std::uint64_t seed, std::size_t pairs, double tolerance) {
    const auto t0 = Clock::now();
    CheckResult r{"surrogate(w_max=n) == exact energy", true, 0, 0.0, tolerance, 0.0};
    for (auto family : kFamilies) {
        for (std::size_t n : {4, 6, 8, 10}) {
            for (std::size_t k = 0; k < pairs; ++k) {
                const auto s = derive_seed({seed, static_cast<std::uint64_t>(family), n, k});
                const ProblemInstance inst = generate_instance(family, n, s);
                const auto layout = build_layout(inst, 1 + k % 3);
                const ParamSet params = init_random_uniform(layout, mix64(s));
                const GateSequence gates = build_gate_sequence(params);
                SurrogateEvaluator surrogate(inst.hamiltonian(), PropagationConfig{.w_max = n});
                const double a = surrogate.energy(gates, params);
                const double b = ExactEvaluator(inst).energy(gates, params);
                const double err = std::abs(a - b);
                r.worst = std::max(r.worst, err);
                r.passed = r.passed && err <= tolerance;
                ++r.cases;
            }
        }
    }
    r.seconds = elapsed(t0);
    return r;
}

CheckResult check_gradients(Engine engine, std::uint64_t seed, std::size_t points,
                            double step, double tolerance) {
    const auto t0 = Clock::now();
    CheckResult r{engine == Engine::Surrogate ? "surrogate gradient == central differences"
                                              : "exact gradient == central differences",
                  true, 0, 0.0, tolerance, 0.0};
    constexpr std::size_t n = 8;
    for (std::size_t k = 0; k < points; ++k) {
        const auto family = kFamilies[k % 3];
        const auto s = derive_seed({seed, static_cast<std::uint64_t>(engine), k});
        const ProblemInstance inst = generate_instance(family, n, s);
        const auto layout = build_layout(inst, 2);
        ParamSet params = init_random_uniform(layout, mix64(s));
        const GateSequence gates = build_gate_sequence(params);

        SurrogateEvaluator surrogate(inst.hamiltonian(), PropagationConfig{.w_max = 4});
        const ExactEvaluator exact(inst);
        auto energy = [&](const ParamSet &p) {
            return engine == Engine::Surrogate ? surrogate.energy(gates, p)
                                               : exact.energy(gates, p);
        };
        std::vector<double> grad(params.size(), 0.0);
        if (engine == Engine::Surrogate) {
            (void)surrogate.energy_and_gradient(gates, params, grad);
        } else {
            (void)exact.energy_and_gradient(gates, params, grad);
        }
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double v = params.value(i);
            params.set(i, v + step);
            const double up = energy(params);
            params.set(i, v - step);
            const double down = energy(params);
            params.set(i, v);
            const double fd = (up - down) / (2.0 * step);
            diff = std::max(diff, std::abs(grad[i] - fd));
            scale = std::max(scale, std::abs(fd));
        }
        const double rel = diff / std::max(scale, 1e-12);
        r.worst = std::max(r.worst, rel);
        r.passed = r.passed && rel <= tolerance;
        ++r.cases;
    }
    r.seconds = elapsed(t0);
    return r;
}

std::string format(const CheckResult &r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s %s: %zu cases, worst %.3e (tol %.1e), %.2f s",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.worst, r.tolerance,
                  r.seconds);
    return buf;
}

} // namespace maqaoa::cli
