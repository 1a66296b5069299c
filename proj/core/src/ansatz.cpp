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
#include "maqaoa/ansatz.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "maqaoa/adam.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/rng.hpp"

namespace maqaoa {

namespace {

using nlohmann::json;

class Fnv1a {
  public:
    void add(std::uint64_t word) {
        for (int b = 0; b < 8; ++b) {
            h_ ^= (word >> (8 * b)) & 0xFFU;
            h_ *= 0x100000001B3ULL;
        }
    }
    [[nodiscard]] std::uint64_t value() const { return h_; }

  private:
    std::uint64_t h_{0xCBF29CE484222325ULL};
};

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void check_index(const AnsatzLayout &layout, std::size_t index) {
    if (index >= layout.dimension()) {
        throw LayoutError("parameter index " + std::to_string(index) +
                          " outside layout of dimension " +
                          std::to_string(layout.dimension()));
    }
}

} // namespace

std::size_t AnsatzLayout::cost_index(std::size_t layer, std::size_t term) const {
    if (layer >= depth || term >= cost_terms.size()) {
        throw LayoutError("cost angle (layer, term) out of range");
    }
    return layer * layer_size() + term;
}

std::size_t AnsatzLayout::mixer_index(std::size_t layer, std::size_t qubit) const {
    if (layer >= depth || qubit >= mixer_terms.size()) {
        throw LayoutError("mixer angle (layer, qubit) out of range");
    }
    return layer * layer_size() + cost_terms.size() + qubit;
}

bool AnsatzLayout::is_cost_index(std::size_t index) const {
    check_index(*this, index);
    return index % layer_size() < cost_terms.size();
}

std::size_t AnsatzLayout::layer_of(std::size_t index) const {
    check_index(*this, index);
    return index / layer_size();
}

const PauliString &AnsatzLayout::generator(std::size_t index) const {
    check_index(*this, index);
    const auto offset = index % layer_size();
    return offset < cost_terms.size()
               ? cost_terms[offset].string
               : mixer_terms[offset - cost_terms.size()];
}

std::uint64_t AnsatzLayout::descriptor_hash() const {
    Fnv1a h;
    h.add(n_qubits);
    h.add(depth);
    h.add(cost_terms.size());
    for (const auto &t : cost_terms) {
        h.add(t.string.x_mask());
        h.add(t.string.z_mask());
        h.add(std::bit_cast<std::uint64_t>(t.coeff));
    }
    h.add(mixer_terms.size());
    for (const auto &m : mixer_terms) {
        h.add(m.x_mask());
        h.add(m.z_mask());
    }
    return h.value();
}

std::shared_ptr<const AnsatzLayout> build_layout(const ProblemInstance &inst,
                                                 std::size_t depth) {
    if (depth < 1) {
        throw ParameterError("ansatz depth must be at least 1");
    }
    auto layout = std::make_shared<AnsatzLayout>();
    layout->n_qubits = inst.n_qubits;
    layout->depth = depth;
    layout->cost_terms = inst.cost_terms();
    if (layout->cost_terms.empty()) {
        throw InvalidInstanceError("instance has an empty cost Hamiltonian");
    }
    layout->mixer_terms.reserve(inst.n_qubits);
    for (std::size_t q = 0; q < inst.n_qubits; ++q) {
        layout->mixer_terms.push_back(PauliString::single(inst.n_qubits, q, PauliOp::X));
    }
    return layout;
}

ParamSet::ParamSet(std::shared_ptr<const AnsatzLayout> layout)
    : layout_{std::move(layout)} {
    if (!layout_) {
        throw LayoutError("ParamSet needs a layout");
    }
    values_.assign(layout_->dimension(), 0.0);
    active_.assign(layout_->dimension(), true);
}

ParamSet::ParamSet(std::shared_ptr<const AnsatzLayout> layout,
                   std::vector<double> values, std::vector<bool> active)
    : layout_{std::move(layout)}, values_{std::move(values)},
      active_{std::move(active)} {
    if (!layout_) {
        throw LayoutError("ParamSet needs a layout");
    }
    if (values_.size() != layout_->dimension() || active_.size() != values_.size()) {
        throw DimensionError("ParamSet vectors do not match layout dimension " +
                             std::to_string(layout_->dimension()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!active_[i] && values_[i] != 0.0) {
            throw LayoutError("inactive parameter " + std::to_string(i) +
                              " has a nonzero value");
        }
    }
}

std::size_t ParamSet::n_active() const noexcept {
    std::size_t count = 0;
    for (bool a : active_) {
        count += a ? 1 : 0;
    }
    return count;
}

void ParamSet::set(std::size_t i, double v) {
    if (!active_.at(i)) {
        throw LayoutError("write to inactive parameter " + std::to_string(i));
    }
    values_[i] = v;
}

void ParamSet::deactivate(std::size_t i) {
    active_.at(i) = false;
    values_[i] = 0.0;
}

std::vector<double> ParamSet::cost_angles() const {
    std::vector<double> out;
    out.reserve(layout_->depth * layout_->cost_count());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (layout_->is_cost_index(i)) {
            out.push_back(values_[i]);
        }
    }
    return out;
}

std::string InitSpec::label() const {
    switch (kind) {
    case InitKind::RandomUniform:
        return "random" + std::to_string(seed_index);
    case InitKind::Constant: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "const%g", magnitude);
        return buf;
    }
    case InitKind::QaoaRelax:
        return "qaoa-relax";
    }
    return "unknown";
}

std::vector<InitSpec> standard_init_roster(std::size_t relax_steps) {
    std::vector<InitSpec> roster;
    int id = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
        roster.push_back({id++, InitKind::RandomUniform, s, 0.0, 0});
    }
    for (double m : {0.01, 0.05, 0.1, 0.2, 0.4}) {
        roster.push_back({id++, InitKind::Constant, 0, m, 0});
    }
    roster.push_back({id++, InitKind::QaoaRelax, 0, 0.0, relax_steps});
    return roster;
}

ParamSet init_random_uniform(std::shared_ptr<const AnsatzLayout> layout,
                             std::uint64_t seed) {
    ParamSet params(std::move(layout));
    CounterRng rng(seed);
    for (auto &v : params.mutable_values()) {
        v = rng.uniform(-0.5, 0.5);
    }
    return params;
}

ParamSet init_constant(std::shared_ptr<const AnsatzLayout> layout, double magnitude) {
    if (!(magnitude > 0.0)) {
        throw ParameterError("constant initialisation needs a positive magnitude");
    }
    ParamSet params(std::move(layout));
    const auto &l = params.layout();
    auto values = params.mutable_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = l.is_cost_index(i) ? magnitude : -magnitude;
    }
    return params;
}

std::vector<AnnealAngles> anneal_schedule(std::size_t depth, double dt) {
    std::vector<AnnealAngles> out;
    out.reserve(depth);
    const auto p = static_cast<double>(depth);
    for (std::size_t l = 1; l <= depth; ++l) {
        const double s = static_cast<double>(l) / p;
        out.push_back({s * dt, -(1.0 - s) * dt});
    }
    return out;
}

ParamSet init_qaoa_relax(std::shared_ptr<const AnsatzLayout> layout,
                         std::size_t relax_steps, const Objective &objective,
                         const AdamConfig &adam) {
    ParamSet params(std::move(layout));
    const auto &l = params.layout();
    const auto schedule = anneal_schedule(l.depth);
    for (std::size_t layer = 0; layer < l.depth; ++layer) {
        for (std::size_t t = 0; t < l.cost_count(); ++t) {
            params.set(l.cost_index(layer, t),
                       schedule[layer].gamma * l.cost_terms[t].coeff);
        }
        for (std::size_t q = 0; q < l.n_qubits; ++q) {
            params.set(l.mixer_index(layer, q), schedule[layer].beta);
        }
    }
    if (relax_steps == 0) {
        return params;
    }
    if (!objective) {
        throw ParameterError("QAOA relax pass needs an objective");
    }
    AdamState state(params.size(), adam);
    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t step = 0; step < relax_steps; ++step) {
        std::fill(grad.begin(), grad.end(), 0.0);
        (void)objective(params, grad);
        state.step(params, grad);
    }
    return params;
}

DistillResult distill(const ParamSet &params, double threshold) {
    if (!(threshold >= 0.0)) {
        throw ParameterError("distillation threshold must be non-negative");
    }
    DistillResult result{params, params.n_active(), 0, 0.0, false};
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params.active(i) && std::abs(params.value(i)) < threshold) {
            result.params.deactivate(i);
            ++result.removed;
        }
    }
    if (result.previous_active > 0) {
        result.reduction_fraction =
            1.0 - static_cast<double>(result.params.n_active()) /
                      static_cast<double>(result.previous_active);
    }
    result.degenerate = result.params.n_active() == 0;
    return result;
}

std::string to_json(const ParamSet &params) {
    json j;
    j["layout_hash"] = hex64(params.layout().descriptor_hash());
    j["n_qubits"] = params.layout().n_qubits;
    j["depth"] = params.layout().depth;
    j["values"] = std::vector<double>(params.values().begin(), params.values().end());
    std::vector<int> mask;
    mask.reserve(params.size());
    for (bool a : params.active_mask()) {
        mask.push_back(a ? 1 : 0);
    }
    j["active"] = std::move(mask);
    return j.dump() + "\n";
}

ParamSet param_set_from_json(std::string_view text,
                             std::shared_ptr<const AnsatzLayout> layout) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &ex) {
        throw ParseError(std::string("parameter JSON: ") + ex.what());
    }
    try {
        if (j.at("layout_hash").get<std::string>() != hex64(layout->descriptor_hash())) {
            throw LayoutError("checkpoint was written for a different layout");
        }
        auto values = j.at("values").get<std::vector<double>>();
        std::vector<bool> active;
        for (const auto &a : j.at("active")) {
            active.push_back(a.get<int>() != 0);
        }
        return ParamSet(std::move(layout), std::move(values), std::move(active));
    } catch (const json::exception &ex) {
        throw ParseError(std::string("parameter JSON: ") + ex.what());
    }
}

} // namespace maqaoa
