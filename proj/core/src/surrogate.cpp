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
#include "maqaoa/surrogate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "maqaoa/errors.hpp"
#include "maqaoa/rng.hpp"

namespace maqaoa {

namespace {

constexpr std::uint64_t kLow32 = 0xFFFFFFFFULL;
constexpr std::uint32_t kEmptySlot = 0xFFFFFFFFU;

std::uint64_t pack(const PauliString &p) { return p.x_mask() | (p.z_mask() << 32U); }

std::size_t packed_weight(std::uint64_t key) {
    return static_cast<std::size_t>(std::popcount((key & kLow32) | (key >> 32U)));
}

/// Insertion-ordered open-addressing map from packed strings to coefficients.
/// Iteration follows insertion order, which keeps every reduction over the
/// table reproducible.
class PauliTable {
  public:
    void clear() {
        keys_.clear();
        coeffs_.clear();
        std::fill(slots_.begin(), slots_.end(), kEmptySlot);
    }

    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }
    [[nodiscard]] std::uint64_t key(std::size_t i) const noexcept { return keys_[i]; }
    [[nodiscard]] double coeff(std::size_t i) const noexcept { return coeffs_[i]; }
    double &coeff(std::size_t i) noexcept { return coeffs_[i]; }

    /// Returns true when the key was new.
    bool add(std::uint64_t key, double value) {
        if (2 * (keys_.size() + 1) > slots_.size()) {
            grow();
        }
        auto slot = find_slot(key);
        if (slots_[slot] != kEmptySlot) {
            coeffs_[slots_[slot]] += value;
            return false;
        }
        slots_[slot] = static_cast<std::uint32_t>(keys_.size());
        keys_.push_back(key);
        coeffs_.push_back(value);
        return true;
    }

    [[nodiscard]] double get(std::uint64_t key) const noexcept {
        if (slots_.empty()) {
            return 0.0;
        }
        auto idx = slots_[find_slot(key)];
        return idx == kEmptySlot ? 0.0 : coeffs_[idx];
    }

    /// Rebuilds the table without entries with |c| < floor (floor > 0) or
    /// exact zeros.
    void prune(double floor) {
        std::vector<std::uint64_t> keys;
        std::vector<double> coeffs;
        keys.reserve(keys_.size());
        coeffs.reserve(keys_.size());
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (coeffs_[i] != 0.0 && std::abs(coeffs_[i]) >= floor) {
                keys.push_back(keys_[i]);
                coeffs.push_back(coeffs_[i]);
            }
        }
        clear();
        for (std::size_t i = 0; i < keys.size(); ++i) {
            add(keys[i], coeffs[i]);
        }
    }

  private:
    [[nodiscard]] std::size_t find_slot(std::uint64_t key) const noexcept {
        const std::size_t mask = slots_.size() - 1;
        std::size_t slot = mix64(key) & mask;
        while (slots_[slot] != kEmptySlot && keys_[slots_[slot]] != key) {
            slot = (slot + 1) & mask;
        }
        return slot;
    }

    void grow() {
        const std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
        slots_.assign(cap, kEmptySlot);
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            slots_[find_slot(keys_[i])] = static_cast<std::uint32_t>(i);
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<double> coeffs_;
    std::vector<std::uint32_t> slots_;
};

struct PackedGate {
    std::uint64_t gx{0};
    std::uint64_t gz{0};
    bool preserves_weight{false};
    std::size_t param_index{0};
};

struct Branch {
    std::uint64_t key;
    double value;
};

/// Anticommuting entry recorded during a replay: coefficient before the gate.
struct Recorded {
    std::uint64_t key;
    double coeff;
};

struct GateStats {
    std::size_t created{0};
    std::size_t discarded{0};
};

bool anticommutes(std::uint64_t key, const PackedGate &g) {
    const std::uint64_t px = key & kLow32;
    const std::uint64_t pz = key >> 32U;
    return (std::popcount((px & g.gz) ^ (pz & g.gx)) & 1) != 0;
}

/// Partner string of an anticommuting key and the real sign of -i*P*G.
Branch branch_of(std::uint64_t key, const PackedGate &g, double scale) {
    const std::uint64_t px = key & kLow32;
    const std::uint64_t pz = key >> 32U;
    const int folded = (product_phase(px, pz, g.gx, g.gz) + 3) & 3;
    const double sign = folded == 0 ? 1.0 : -1.0;
    return {(px ^ g.gx) | ((pz ^ g.gz) << 32U), sign * scale};
}

/// table <- Pi C(theta) table, with cos/sin of theta = 2 * gamma supplied.
GateStats apply_gate(PauliTable &table, const PackedGate &g, double c, double s,
                     std::size_t w_max, std::vector<Branch> &pending,
                     std::vector<std::uint32_t> &hits, std::vector<Recorded> *record) {
    GateStats stats;
    pending.clear();
    const std::size_t count = table.size();
    hits.resize(count);
    std::size_t n_hits = 0;
    for (std::size_t i = 0; i < count; ++i) {
        hits[n_hits] = static_cast<std::uint32_t>(i);
        n_hits += anticommutes(table.key(i), g) ? 1 : 0;
    }
    if (record != nullptr) {
        record->reserve(record->size() + n_hits);
    }
    for (std::size_t h = 0; h < n_hits; ++h) {
        const std::size_t i = hits[h];
        const std::uint64_t key = table.key(i);
        const double coeff = table.coeff(i);
        if (coeff == 0.0) {
            continue;
        }
        if (record != nullptr) {
            record->push_back({key, coeff});
        }
        table.coeff(i) = c * coeff;
        const std::uint64_t partner =
            ((key & kLow32) ^ g.gx) | (((key >> 32U) ^ g.gz) << 32U);
        if (!g.preserves_weight && packed_weight(partner) > w_max) {
            ++stats.discarded;
            continue;
        }
        pending.push_back(branch_of(key, g, s * coeff));
    }
    // Each partner receives at most one contribution, so the result does not
    // depend on the order of `pending`.
    for (const auto &b : pending) {
        stats.created += table.add(b.key, b.value) ? 1 : 0;
    }
    return stats;
}

double plus_expectation(const PauliTable &table) {
    double total = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if ((table.key(i) >> 32U) == 0) {
            total += table.coeff(i);
        }
    }
    return total;
}

std::size_t table_max_weight(const PauliTable &table) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        w = std::max(w, packed_weight(table.key(i)));
    }
    return w;
}

std::size_t nonzero_count(const PauliTable &table) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        n += table.coeff(i) != 0.0 ? 1 : 0;
    }
    return n;
}

void check_config(std::size_t n_qubits, const PropagationConfig &cfg) {
    if (n_qubits == 0 || n_qubits > kMaxPropagationQubits) {
        throw InvalidSizeError("propagation supports 1..32 qubits, got " +
                               std::to_string(n_qubits));
    }
    if (cfg.w_max < 1 || cfg.w_max > n_qubits) {
        throw ParameterError("w_max must be in [1, " + std::to_string(n_qubits) +
                             "], got " + std::to_string(cfg.w_max));
    }
    if (!(cfg.coeff_floor >= 0.0)) {
        throw ParameterError("coeff_floor must be non-negative");
    }
}

/// Enumerates X-only strings of weight <= w_max: the support of rho.
void fill_plus_functional(PauliTable &table, std::size_t n, std::size_t w_max) {
    table.clear();
    table.add(0, 1.0);
    std::vector<std::size_t> idx;
    for (std::size_t r = 1; r <= w_max; ++r) {
        idx.resize(r);
        for (std::size_t k = 0; k < r; ++k) {
            idx[k] = k;
        }
        while (true) {
            std::uint64_t x = 0;
            for (auto q : idx) {
                x |= std::uint64_t{1} << q;
            }
            table.add(x, 1.0);
            std::size_t k = r;
            while (k > 0 && idx[k - 1] == n - r + (k - 1)) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++idx[k - 1];
            for (std::size_t m = k; m < r; ++m) {
                idx[m] = idx[m - 1] + 1;
            }
        }
    }
}

} // namespace

std::size_t PropagationTrace::max_tracked() const noexcept {
    std::size_t m = 0;
    for (const auto &r : rows) {
        m = std::max(m, r.tracked);
    }
    return m;
}

std::size_t PropagationTrace::max_weight() const noexcept {
    std::size_t m = 0;
    for (const auto &r : rows) {
        m = std::max(m, r.max_weight);
    }
    return m;
}

void PropagationTrace::write_csv(std::ostream &os) const {
    os << "step,gate,param_index,tracked,created,discarded,max_weight\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        os << i << ',' << r.gate << ',' << r.param_index << ',' << r.tracked << ','
           << r.created << ',' << r.discarded << ',' << r.max_weight << '\n';
    }
}

std::uint64_t tracked_count_bound(std::size_t n, std::size_t w_max) {
    if (w_max > n) {
        throw ParameterError("w_max exceeds qubit count");
    }
    std::uint64_t total = 0;
    std::uint64_t binom = 1; // C(n, r)
    std::uint64_t pow3 = 1;
    for (std::size_t r = 0; r <= w_max; ++r) {
        if (r > 0) {
            binom = binom * (n - r + 1) / r;
            pow3 *= 3;
        }
        total += binom * pow3;
    }
    return total;
}

struct SurrogateEvaluator::Impl {
    PropagationConfig cfg;
    std::size_t n_qubits{0};
    std::vector<std::pair<std::uint64_t, double>> observable;

    PauliTable work;
    PauliTable dual;
    PauliTable rho;
    std::vector<PauliTable> checkpoints;
    std::vector<std::vector<Recorded>> records;
    std::vector<std::vector<Recorded>> all_records;
    /// Cleared once a forward pass overflows the record budget.
    bool record_all{true};
    std::vector<Branch> pending;
    std::vector<std::uint32_t> hits;
    std::vector<PackedGate> packed;
    std::vector<double> cosines;
    std::vector<double> sines;

    void load_observable() {
        work.clear();
        for (const auto &[k, c] : observable) {
            work.add(k, c);
        }
    }

    void prepare(const GateSequence &gates, const ParamSet &params) {
        if (params.layout().n_qubits != n_qubits) {
            throw DimensionError("parameter layout and observable differ in qubit count");
        }
        validate_gates(gates, params);
        packed.resize(gates.size());
        cosines.resize(gates.size());
        sines.resize(gates.size());
        for (std::size_t k = 0; k < gates.size(); ++k) {
            const auto &g = gates[k].generator;
            packed[k] = {g.x_mask(), g.z_mask(), g.weight() <= 1, gates[k].param_index};
            const double theta = 2.0 * params.value(gates[k].param_index);
            cosines[k] = std::cos(theta);
            sines[k] = std::sin(theta);
        }
    }

    void after_gate(PauliTable &table) {
        if (cfg.coeff_floor > 0.0) {
            table.prune(cfg.coeff_floor);
        }
    }

    double energy(const GateSequence &gates, const ParamSet &params,
                  PropagationTrace *trace) {
        prepare(gates, params);
        load_observable();
        if (trace != nullptr) {
            trace->rows.clear();
        }
        for (std::size_t k = gates.size(); k-- > 0;) {
            auto st = apply_gate(work, packed[k], cosines[k], sines[k], cfg.w_max,
                                 pending, hits, nullptr);
            after_gate(work);
            if (trace != nullptr) {
                trace->rows.push_back({k, packed[k].param_index, nonzero_count(work),
                                       st.created, st.discarded,
                                       table_max_weight(work)});
            }
        }
        return plus_expectation(work);
    }

    double energy_and_gradient(const GateSequence &gates, const ParamSet &params,
                               std::span<double> gradient) {
        if (gradient.size() != params.size()) {
            throw DimensionError("gradient buffer length differs from parameter count");
        }
        std::fill(gradient.begin(), gradient.end(), 0.0);
        prepare(gates, params);
        const std::size_t n_gates = gates.size();
        load_observable();
        if (n_gates == 0) {
            return plus_expectation(work);
        }
        dual = rho;
        auto gate_gradient = [&](std::size_t k, const std::vector<Recorded> &recorded) {
            const auto &g = packed[k];
            const double c = cosines[k];
            const double s = sines[k];
            double d = 0.0;
            for (const auto &r : recorded) {
                double term = -s * dual.get(r.key);
                const std::uint64_t partner =
                    ((r.key & kLow32) ^ g.gx) | (((r.key >> 32U) ^ g.gz) << 32U);
                if (g.preserves_weight || packed_weight(partner) <= cfg.w_max) {
                    const auto br = branch_of(r.key, g, 1.0);
                    term += c * br.value * dual.get(br.key);
                }
                d += r.coeff * term;
            }
            gradient[g.param_index] = 2.0 * d;
            if (k + 1 < n_gates) {
                apply_gate(dual, g, c, -s, cfg.w_max, pending, hits, nullptr);
            }
        };

        if (record_all) {
            all_records.resize(n_gates);
            std::size_t bytes = 0;
            for (std::size_t k = n_gates; k-- > 0;) {
                all_records[k].clear();
                apply_gate(work, packed[k], cosines[k], sines[k], cfg.w_max, pending, hits,
                           &all_records[k]);
                after_gate(work);
                bytes += all_records[k].size() * sizeof(Recorded);
                if (bytes > cfg.tape_budget_bytes) {
                    record_all = false;
                    all_records = {};
                    break;
                }
            }
            if (record_all) {
                const double value = plus_expectation(work);
                for (std::size_t k = 0; k < n_gates; ++k) {
                    gate_gradient(k, all_records[k]);
                }
                return value;
            }
            load_observable();
        }

        const auto stride = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_gates)))));
        const std::size_t n_segments = (n_gates + stride - 1) / stride;
        checkpoints.resize(n_segments);

        // Heisenberg sweep; checkpoint[j] holds the operator just before the
        // last gate of segment j is applied.
        for (std::size_t k = n_gates; k-- > 0;) {
            const std::size_t seg = k / stride;
            const std::size_t seg_last = std::min(n_gates, (seg + 1) * stride) - 1;
            if (k == seg_last) {
                checkpoints[seg] = work;
            }
            apply_gate(work, packed[k], cosines[k], sines[k], cfg.w_max, pending, hits, nullptr);
            after_gate(work);
        }
        const double value = plus_expectation(work);

        records.resize(stride);
        for (std::size_t seg = 0; seg < n_segments; ++seg) {
            const std::size_t first = seg * stride;
            const std::size_t last = std::min(n_gates, first + stride) - 1;
            // Replay the segment backwards, recording the anticommuting
            // entries each gate sees.
            work = checkpoints[seg];
            for (std::size_t k = last + 1; k-- > first;) {
                auto &rec = records[k - first];
                rec.clear();
                if (k == first) {
                    for (std::size_t i = 0; i < work.size(); ++i) {
                        const auto key = work.key(i);
                        if (work.coeff(i) != 0.0 && anticommutes(key, packed[k])) {
                            rec.push_back({key, work.coeff(i)});
                        }
                    }
                    break;
                }
                apply_gate(work, packed[k], cosines[k], sines[k], cfg.w_max, pending, hits,
                           &rec);
                after_gate(work);
            }
            for (std::size_t k = first; k <= last; ++k) {
                gate_gradient(k, records[k - first]);
            }
        }
        return value;
    }
};

SurrogateEvaluator::SurrogateEvaluator(const PauliSum &observable, PropagationConfig cfg)
    : impl_{std::make_unique<Impl>()} {
    check_config(observable.n_qubits(), cfg);
    impl_->cfg = cfg;
    impl_->n_qubits = observable.n_qubits();
    for (const auto &[s, c] : observable.terms()) {
        if (s.weight() <= cfg.w_max) {
            impl_->observable.emplace_back(pack(s), c);
        }
    }
    fill_plus_functional(impl_->rho, impl_->n_qubits, cfg.w_max);
}

SurrogateEvaluator::~SurrogateEvaluator() = default;
SurrogateEvaluator::SurrogateEvaluator(SurrogateEvaluator &&) noexcept = default;
SurrogateEvaluator &SurrogateEvaluator::operator=(SurrogateEvaluator &&) noexcept = default;

const PropagationConfig &SurrogateEvaluator::config() const noexcept { return impl_->cfg; }

double SurrogateEvaluator::energy(const GateSequence &gates, const ParamSet &params,
                                  PropagationTrace *trace) {
    return impl_->energy(gates, params, trace);
}

double SurrogateEvaluator::energy_and_gradient(const GateSequence &gates,
                                               const ParamSet &params,
                                               std::span<double> gradient) {
    return impl_->energy_and_gradient(gates, params, gradient);
}

PauliSum SurrogateEvaluator::propagated_operator() const {
    PauliSum out(impl_->n_qubits);
    const auto &table = impl_->work;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto key = table.key(i);
        out.add(PauliString(impl_->n_qubits, key & kLow32, key >> 32U), table.coeff(i));
    }
    return out;
}

Objective SurrogateEvaluator::objective() {
    return [this](const ParamSet &params, std::span<double> gradient) {
        return energy_and_gradient(build_gate_sequence(params), params, gradient);
    };
}

PauliSum propagate(const PauliSum &observable, const GateSequence &gates,
                   const ParamSet &params, const PropagationConfig &cfg,
                   PropagationTrace *trace) {
    check_config(observable.n_qubits(), cfg);
    SurrogateEvaluator eval(observable, cfg);
    (void)eval.energy(gates, params, trace);
    return eval.propagated_operator();
}

double surrogate_energy(const ProblemInstance &inst, const GateSequence &gates,
                        const ParamSet &params, const PropagationConfig &cfg) {
    SurrogateEvaluator eval(inst.hamiltonian(), cfg);
    return eval.energy(gates, params);
}

std::vector<double> surrogate_gradient(const ProblemInstance &inst,
                                       const GateSequence &gates, const ParamSet &params,
                                       const PropagationConfig &cfg) {
    SurrogateEvaluator eval(inst.hamiltonian(), cfg);
    std::vector<double> grad(params.size(), 0.0);
    (void)eval.energy_and_gradient(gates, params, grad);
    return grad;
}

} // namespace maqaoa
