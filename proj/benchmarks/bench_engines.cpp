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
#include <benchmark/benchmark.h>

#include <vector>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/surrogate.hpp"

namespace {

using namespace maqaoa;

struct Setup {
    ProblemInstance inst;
    ParamSet params;
    GateSequence gates;

    Setup(std::size_t n, std::size_t p)
        : inst(generate_sk(n, 17)), params(init_random_uniform(build_layout(inst, p), 3)),
          gates(build_gate_sequence(params)) {}
};

void BM_SurrogateEnergy(benchmark::State &state) {
    const Setup s(static_cast<std::size_t>(state.range(0)), 2);
    SurrogateEvaluator eval(s.inst.hamiltonian(),
                            PropagationConfig{.w_max = static_cast<std::size_t>(state.range(1))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.energy(s.gates, s.params));
    }
}
BENCHMARK(BM_SurrogateEnergy)->Args({12, 3})->Args({12, 4})->Args({16, 3})->Unit(benchmark::kMillisecond);

void BM_SurrogateGradient(benchmark::State &state) {
    const Setup s(static_cast<std::size_t>(state.range(0)), 2);
    SurrogateEvaluator eval(s.inst.hamiltonian(),
                            PropagationConfig{.w_max = static_cast<std::size_t>(state.range(1))});
    std::vector<double> grad(s.params.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.energy_and_gradient(s.gates, s.params, grad));
    }
}
BENCHMARK(BM_SurrogateGradient)->Args({12, 3})->Args({12, 4})->Unit(benchmark::kMillisecond);

void BM_SurrogateGradientCheckpointed(benchmark::State &state) {
    const Setup s(12, 2);
    SurrogateEvaluator eval(s.inst.hamiltonian(),
                            PropagationConfig{.w_max = 4, .tape_budget_bytes = 0});
    std::vector<double> grad(s.params.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.energy_and_gradient(s.gates, s.params, grad));
    }
}
BENCHMARK(BM_SurrogateGradientCheckpointed)->Unit(benchmark::kMillisecond);

void BM_ExactEnergy(benchmark::State &state) {
    const Setup s(static_cast<std::size_t>(state.range(0)), 2);
    const ExactEvaluator eval(s.inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.energy(s.gates, s.params));
    }
}
BENCHMARK(BM_ExactEnergy)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExactGradient(benchmark::State &state) {
    const Setup s(static_cast<std::size_t>(state.range(0)), 2);
    const ExactEvaluator eval(s.inst);
    std::vector<double> grad(s.params.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.energy_and_gradient(s.gates, s.params, grad));
    }
}
BENCHMARK(BM_ExactGradient)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BruteForceExtremes(benchmark::State &state) {
    const auto inst = generate_sk(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_extremes(inst));
    }
}
BENCHMARK(BM_BruteForceExtremes)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
