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
 * @file ansatz.hpp
 * ma-QAOA parameter layout, active-parameter masks, initialisation roster and
 * distillation.
 *
 * Layer l occupies indices [l * (M_C + n), (l + 1) * (M_C + n)): first one
 * angle per cost term in Hamiltonian term order, then one angle per qubit
 * for the X mixer. Each angle multiplies the bare Pauli word, i.e. the gate
 * is exp(-i * angle * P) and the term coefficient is absorbed in the angle.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maqaoa/pauli.hpp"
#include "maqaoa/problems.hpp"

namespace maqaoa {

struct AdamConfig;

struct AnsatzLayout {
    std::size_t n_qubits{0};
    std::size_t depth{0};
    std::vector<WeightedPauli> cost_terms;
    std::vector<PauliString> mixer_terms;

    [[nodiscard]] std::size_t cost_count() const noexcept { return cost_terms.size(); }
    [[nodiscard]] std::size_t layer_size() const noexcept {
        return cost_terms.size() + mixer_terms.size();
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return depth * layer_size();
    }
    [[nodiscard]] std::size_t cost_index(std::size_t layer, std::size_t term) const;
    [[nodiscard]] std::size_t mixer_index(std::size_t layer, std::size_t qubit) const;
    [[nodiscard]] bool is_cost_index(std::size_t index) const;
    [[nodiscard]] std::size_t layer_of(std::size_t index) const;
    [[nodiscard]] const PauliString &generator(std::size_t index) const;

    /// FNV-1a digest of (n, p, cost strings, coefficients, mixers). Used to
    /// match checkpoints with the layout they were produced for.
    [[nodiscard]] std::uint64_t descriptor_hash() const;
};

/// p >= 1; throws InvalidInstanceError for an instance without cost terms.
[[nodiscard]] std::shared_ptr<const AnsatzLayout>
build_layout(const ProblemInstance &inst, std::size_t depth);

class ParamSet {
  public:
    ParamSet() = default;
    /// All zeros, all active.
    explicit ParamSet(std::shared_ptr<const AnsatzLayout> layout);
    ParamSet(std::shared_ptr<const AnsatzLayout> layout, std::vector<double> values,
             std::vector<bool> active);

    [[nodiscard]] const AnsatzLayout &layout() const { return *layout_; }
    [[nodiscard]] const std::shared_ptr<const AnsatzLayout> &layout_ptr() const noexcept {
        return layout_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<bool> &active_mask() const noexcept { return active_; }
    [[nodiscard]] double value(std::size_t i) const { return values_.at(i); }
    [[nodiscard]] bool active(std::size_t i) const { return active_.at(i); }
    [[nodiscard]] std::size_t n_active() const noexcept;

    /// Writes an active entry; writes to inactive entries are rejected.
    void set(std::size_t i, double v);
    /// Mutable view for optimizers; callers must leave inactive entries at 0.
    [[nodiscard]] std::span<double> mutable_values() noexcept { return values_; }

    /// Freezes entry i at zero.
    void deactivate(std::size_t i);

    /// Values of the cost-angle entries, in index order.
    [[nodiscard]] std::vector<double> cost_angles() const;

    friend bool operator==(const ParamSet &a, const ParamSet &b) {
        return a.values_ == b.values_ && a.active_ == b.active_;
    }

  private:
    std::shared_ptr<const AnsatzLayout> layout_;
    std::vector<double> values_;
    std::vector<bool> active_;
};

enum class InitKind { RandomUniform, Constant, QaoaRelax };

struct InitSpec {
    /// Position in the roster, 0..10 for the standard set.
    int id{0};
    InitKind kind{InitKind::RandomUniform};
    /// RandomUniform: seed index; the actual RNG seed is derived per run.
    std::uint64_t seed_index{0};
    /// Constant: magnitude of every angle.
    double magnitude{0.0};
    /// QaoaRelax: Adam steps of the relaxation pass.
    std::size_t relax_steps{0};

    [[nodiscard]] std::string label() const;
};

inline constexpr double kAnnealTimeStep = 0.5;
inline constexpr std::size_t kDefaultRelaxSteps = 50;

/// Five random seeds, constants {0.01, 0.05, 0.1, 0.2, 0.4}, one QAOA relax.
[[nodiscard]] std::vector<InitSpec> standard_init_roster(
    std::size_t relax_steps = kDefaultRelaxSteps);

/// Energy and gradient at a parameter point. The gradient span has one
/// entry per parameter and must be zero at inactive indices.
using Objective = std::function<double(const ParamSet &, std::span<double>)>;

[[nodiscard]] ParamSet init_random_uniform(std::shared_ptr<const AnsatzLayout> layout,
                                           std::uint64_t seed);
[[nodiscard]] ParamSet init_constant(std::shared_ptr<const AnsatzLayout> layout,
                                     double magnitude);

/// Per-layer (gamma_l, beta_l) of the discretised annealing schedule.
struct AnnealAngles {
    double gamma{0.0};
    double beta{0.0};
};
[[nodiscard]] std::vector<AnnealAngles> anneal_schedule(std::size_t depth,
                                                        double dt = kAnnealTimeStep);

/// Schedule expanded term-wise (cost angle = gamma_l * c_alpha), then
/// relaxed by `relax_steps` Adam steps on `objective`.
[[nodiscard]] ParamSet init_qaoa_relax(std::shared_ptr<const AnsatzLayout> layout,
                                       std::size_t relax_steps,
                                       const Objective &objective,
                                       const AdamConfig &adam);

struct DistillResult {
    ParamSet params;
    std::size_t previous_active{0};
    std::size_t removed{0};
    /// removed / previous_active, 0 when nothing was active.
    double reduction_fraction{0.0};
    /// Nothing left to train.
    bool degenerate{false};
};

/// Deactivates every active entry with |value| < threshold.
[[nodiscard]] DistillResult distill(const ParamSet &params, double threshold);

[[nodiscard]] std::string to_json(const ParamSet &params);
/// Rejects documents whose layout hash differs from `layout`.
[[nodiscard]] ParamSet param_set_from_json(std::string_view text,
                                           std::shared_ptr<const AnsatzLayout> layout);

} // namespace maqaoa
