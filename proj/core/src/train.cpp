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
#include "maqaoa/train.hpp"

#include <cmath>
#include <utility>

#include "maqaoa/errors.hpp"
#include "maqaoa/gate_sequence.hpp"
#include "maqaoa/metrics.hpp"

namespace maqaoa {

namespace {

const EnergyExtremes &require_extremes(const ProblemInstance &inst) {
    if (!inst.extremes) {
        throw InvalidInstanceError("instance has no energy extremes");
    }
    return *inst.extremes;
}

void check_energy(double e) {
    if (!std::isfinite(e)) {
        throw NonFiniteGradientError("non-finite energy");
    }
}

} // namespace

ParamSet initialize(const InitSpec &spec, std::shared_ptr<const AnsatzLayout> layout,
                    std::uint64_t rng_seed, const Objective &relax_objective,
                    const AdamConfig &adam) {
    switch (spec.kind) {
    case InitKind::RandomUniform:
        return init_random_uniform(std::move(layout), rng_seed);
    case InitKind::Constant:
        return init_constant(std::move(layout), spec.magnitude);
    case InitKind::QaoaRelax:
        return init_qaoa_relax(std::move(layout), spec.relax_steps, relax_objective, adam);
    }
    throw ParameterError("unknown initialisation kind");
}

PretrainResult pretrain(SurrogateEvaluator &surrogate, const ParamSet &start,
                        std::size_t steps, const AdamConfig &adam) {
    PretrainResult out{start, start, {}};
    out.surrogate_energies.reserve(steps + 1);
    const GateSequence gates = build_gate_sequence(start);
    AdamState opt(start.size(), adam);
    std::vector<double> grad(start.size(), 0.0);
    for (std::size_t t = 0; t < steps; ++t) {
        const double e = surrogate.energy_and_gradient(gates, out.pretrained, grad);
        check_energy(e);
        out.surrogate_energies.push_back(e);
        opt.step(out.pretrained, grad);
    }
    const double e = surrogate.energy(gates, out.pretrained);
    check_energy(e);
    out.surrogate_energies.push_back(e);
    return out;
}

void finetune(const ExactEvaluator &exact, const EnergyExtremes &extremes,
              const ParamSet &start, std::size_t steps, const AdamConfig &adam,
              TrajectoryRecord &rec) {
    ParamSet params = start;
    rec.n_params = params.size();
    rec.n_active_after = params.n_active();
    rec.finetune_steps = steps;
    rec.learning_rate = adam.learning_rate;
    rec.exact.clear();
    rec.exact.reserve(steps + 1);
    const GateSequence gates = build_gate_sequence(params);
    if (params.n_active() == 0) {
        const double e = exact.energy(gates, params);
        check_energy(e);
        rec.exact.assign(steps + 1, TrajectoryPoint{e, approximation_ratio(e, extremes)});
        rec.final_params = params;
        return;
    }
    AdamState opt(params.size(), adam);
    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t t = 0; t <= steps; ++t) {
        const double e = t < steps ? exact.energy_and_gradient(gates, params, grad)
                                   : exact.energy(gates, params);
        check_energy(e);
        rec.exact.push_back({e, approximation_ratio(e, extremes)});
        if (t < steps) {
            opt.step(params, grad);
        }
    }
    rec.final_params = std::move(params);
}

TrajectoryRecord complete_safe(const PretrainResult &pre, const ExactEvaluator &exact,
                               const EnergyExtremes &extremes, const RunIdentity &id,
                               const StageConfig &cfg) {
    if (id.method == Method::ExactOnly) {
        throw ParameterError("complete_safe called for an exact-only run");
    }
    TrajectoryRecord rec;
    rec.id = id;
    rec.pretrain_steps = pre.surrogate_energies.empty() ? 0 : pre.surrogate_energies.size() - 1;
    rec.surrogate_energies = pre.surrogate_energies;
    rec.initial = pre.initial;
    rec.pretrained = pre.pretrained;
    rec.n_active_before = pre.pretrained.n_active();
    {
        const GateSequence gates = build_gate_sequence(pre.pretrained);
        const double e = exact.energy(gates, pre.pretrained);
        check_energy(e);
        rec.alpha_lwpp = approximation_ratio(e, extremes);
    }
    ParamSet start = pre.pretrained;
    if (id.method == Method::SafeDistill) {
        DistillResult d = distill(pre.pretrained, cfg.distill_threshold);
        rec.reduction_fraction = d.reduction_fraction;
        rec.degenerate = d.degenerate;
        rec.distilled = d.params;
        start = std::move(d.params);
    }
    finetune(exact, extremes, start, cfg.finetune_steps, cfg.adam, rec);
    return rec;
}

TrajectoryRecord run_exact_only(const ProblemInstance &inst,
                                std::shared_ptr<const AnsatzLayout> layout,
                                const InitSpec &init, std::uint64_t init_seed,
                                const RunIdentity &id, const StageConfig &cfg) {
    const auto &extremes = require_extremes(inst);
    ExactEvaluator exact(inst);
    const ParamSet start = initialize(init, std::move(layout), init_seed, exact.objective(), cfg.adam);
    TrajectoryRecord rec;
    rec.id = id;
    rec.initial = start;
    rec.n_active_before = start.n_active();
    finetune(exact, extremes, start, cfg.finetune_steps, cfg.adam, rec);
    return rec;
}

TrajectoryRecord run_safe(const ProblemInstance &inst,
                          std::shared_ptr<const AnsatzLayout> layout, const InitSpec &init,
                          std::uint64_t init_seed, const RunIdentity &id,
                          const StageConfig &cfg) {
    const auto &extremes = require_extremes(inst);
    SurrogateEvaluator surrogate(inst.hamiltonian(), PropagationConfig{.w_max = cfg.w_max});
    const ParamSet start =
        initialize(init, std::move(layout), init_seed, surrogate.objective(), cfg.adam);
    const PretrainResult pre = pretrain(surrogate, start, cfg.pretrain_steps, cfg.adam);
    ExactEvaluator exact(inst);
    return complete_safe(pre, exact, extremes, id, cfg);
}

} // namespace maqaoa
