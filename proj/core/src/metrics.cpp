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
#include "maqaoa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "maqaoa/errors.hpp"

namespace maqaoa {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fixed(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string opt(const std::optional<double> &v) { return v ? num(*v) : std::string{}; }

struct Setting {
    Family family;
    std::size_t n;
    std::size_t p;
    friend auto operator<=>(const Setting &, const Setting &) = default;
};

const CellAggregate *find_cell(std::span<const CellAggregate> cells, const CellKey &key) {
    auto it = std::lower_bound(cells.begin(), cells.end(), key,
                               [](const CellAggregate &c, const CellKey &k) { return c.key < k; });
    return (it != cells.end() && it->key == key) ? &*it : nullptr;
}

CellKey exact_key(const Setting &s) {
    return {s.family, s.n, s.p, Method::ExactOnly, 0, 0.0};
}
CellKey no_distill_key(const Setting &s, std::size_t w) {
    return {s.family, s.n, s.p, Method::SafeNoDistill, w, 0.0};
}
CellKey distill_key(const Setting &s, std::size_t w, double t) {
    return {s.family, s.n, s.p, Method::SafeDistill, w, t};
}

std::set<Setting> settings_of(std::span<const CellAggregate> cells) {
    std::set<Setting> out;
    for (const auto &c : cells) {
        out.insert({c.key.family, c.key.n_qubits, c.key.depth});
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> columns_of(const std::set<Setting> &settings) {
    std::set<std::pair<std::size_t, std::size_t>> cols;
    for (const auto &s : settings) {
        cols.insert({s.p, s.n});
    }
    return {cols.begin(), cols.end()};
}

std::vector<Family> families_of(const std::set<Setting> &settings) {
    std::vector<Family> out;
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        if (std::any_of(settings.begin(), settings.end(),
                        [f](const Setting &s) { return s.family == f; })) {
            out.push_back(f);
        }
    }
    return out;
}

} // namespace

double approximation_ratio(double energy, const EnergyExtremes &extremes) {
    const double span = extremes.e_max - extremes.e_min;
    if (!(span > 0.0)) {
        throw UndefinedRatioError("approximation ratio undefined for e_max == e_min");
    }
    return (extremes.e_max - energy) / span;
}

std::size_t first_hit_step(std::span<const double> alphas, double level) {
    if (alphas.empty()) {
        throw ParameterError("first-hit step of an empty trajectory");
    }
    const double best = *std::max_element(alphas.begin(), alphas.end());
    const double target = level * best;
    for (std::size_t t = 0; t < alphas.size(); ++t) {
        if (alphas[t] >= target) {
            return t;
        }
    }
    return static_cast<std::size_t>(
        std::max_element(alphas.begin(), alphas.end()) - alphas.begin());
}

double ballpark_cost(double n_active, double tau) {
    if (n_active < 0.0 || tau < 0.0) {
        throw ParameterError("ballpark cost needs non-negative inputs");
    }
    return n_active * tau;
}

double circular_cosine_similarity(std::span<const double> phi, std::span<const double> psi) {
    if (phi.size() != psi.size()) {
        throw DimensionError("angle vectors differ in length");
    }
    if (phi.empty()) {
        throw DimensionError("circular similarity of empty vectors");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        s += std::cos(phi[k] - psi[k]);
    }
    return s / static_cast<double>(phi.size());
}

std::optional<double> cost_angle_similarity(const ParamSet &before, const ParamSet &after) {
    if (before.size() != after.size()) {
        throw DimensionError("checkpoints differ in dimension");
    }
    std::vector<double> a;
    std::vector<double> b;
    const auto &layout = before.layout();
    for (std::size_t i = 0; i < before.size(); ++i) {
        if (layout.is_cost_index(i) && before.active(i) && after.active(i)) {
            a.push_back(before.value(i));
            b.push_back(after.value(i));
        }
    }
    if (a.empty()) {
        return std::nullopt;
    }
    return circular_cosine_similarity(a, b);
}

RunSummary summarize(const TrajectoryRecord &rec) {
    if (rec.exact.empty()) {
        throw ParameterError("trajectory has no exact steps");
    }
    RunSummary s;
    s.id = rec.id;
    std::vector<double> alphas;
    alphas.reserve(rec.exact.size());
    for (const auto &pt : rec.exact) {
        alphas.push_back(pt.alpha);
    }
    s.alpha_step0 = alphas.front();
    s.alpha_final = alphas.back();
    s.alpha_best = *std::max_element(alphas.begin(), alphas.end());
    s.tau_099 = first_hit_step(alphas, 0.99);
    s.n_params = rec.n_params;
    s.n_active_before = rec.n_active_before;
    s.n_active = rec.n_active_after;
    s.c_ballpark = ballpark_cost(static_cast<double>(s.n_active), static_cast<double>(s.tau_099));
    s.reduction_fraction = rec.reduction_fraction;
    s.energy_step0 = rec.exact.front().energy;
    s.energy_final = rec.exact.back().energy;
    s.degenerate = rec.degenerate;
    s.alpha_lwpp = rec.alpha_lwpp;
    const auto &anchor = rec.distilled ? rec.distilled : rec.pretrained;
    if (anchor && rec.final_params) {
        s.cost_angle_similarity = cost_angle_similarity(*anchor, *rec.final_params);
    }
    return s;
}

CellKey cell_of(const RunIdentity &id) {
    CellKey k{id.family, id.n_qubits, id.depth, id.method, id.w_max, id.threshold};
    if (id.method == Method::ExactOnly) {
        k.w_max = 0;
        k.threshold = 0.0;
    } else if (id.method == Method::SafeNoDistill) {
        k.threshold = 0.0;
    }
    return k;
}

std::vector<CellAggregate> aggregate(std::span<const RunSummary> summaries) {
    std::map<CellKey, std::vector<const RunSummary *>> groups;
    for (const auto &s : summaries) {
        groups[cell_of(s.id)].push_back(&s);
    }
    std::vector<CellAggregate> out;
    out.reserve(groups.size());
    for (const auto &[key, runs] : groups) {
        CellAggregate c;
        c.key = key;
        c.runs = runs.size();
        const auto n = static_cast<double>(runs.size());
        c.best_alpha_step0 = -INFINITY;
        c.best_alpha_final = -INFINITY;
        double lwpp_sum = 0.0;
        double sim_sum = 0.0;
        std::size_t lwpp_count = 0;
        std::size_t sim_count = 0;
        for (const auto *r : runs) {
            c.degenerate_runs += r->degenerate ? 1 : 0;
            c.mean_alpha_step0 += r->alpha_step0 / n;
            c.mean_alpha_final += r->alpha_final / n;
            c.best_alpha_step0 = std::max(c.best_alpha_step0, r->alpha_step0);
            c.best_alpha_final = std::max(c.best_alpha_final, r->alpha_final);
            c.mean_reduction += r->reduction_fraction / n;
            c.mean_tau += static_cast<double>(r->tau_099) / n;
            c.mean_n_active += static_cast<double>(r->n_active) / n;
            c.mean_run_c_ballpark += r->c_ballpark / n;
            if (r->alpha_lwpp) {
                lwpp_sum += *r->alpha_lwpp;
                ++lwpp_count;
                c.best_alpha_lwpp = std::max(c.best_alpha_lwpp.value_or(-INFINITY), *r->alpha_lwpp);
            }
            if (r->cost_angle_similarity) {
                sim_sum += *r->cost_angle_similarity;
                ++sim_count;
            }
        }
        if (lwpp_count > 0) {
            c.mean_alpha_lwpp = lwpp_sum / static_cast<double>(lwpp_count);
        }
        if (sim_count > 0) {
            c.mean_cost_angle_similarity = sim_sum / static_cast<double>(sim_count);
        }
        c.c_ballpark = c.mean_n_active * c.mean_tau;
        out.push_back(c);
    }
    return out;
}

ReductionStats reduction_stats(std::span<const CellAggregate> cells, std::size_t w_max,
                               double threshold) {
    ReductionStats r;
    double n_full = 0.0;
    double n_dist = 0.0;
    double red = 0.0;
    double tau_e = 0.0;
    double tau_n = 0.0;
    double tau_d = 0.0;
    for (const auto &s : settings_of(cells)) {
        const auto *ex = find_cell(cells, exact_key(s));
        const auto *nd = find_cell(cells, no_distill_key(s, w_max));
        const auto *di = find_cell(cells, distill_key(s, w_max, threshold));
        if (ex == nullptr || nd == nullptr || di == nullptr) {
            continue;
        }
        ++r.settings;
        n_full += ex->mean_n_active;
        n_dist += di->mean_n_active;
        red += di->mean_reduction;
        r.sum_c_exact += ex->c_ballpark;
        r.sum_c_no_distill += nd->c_ballpark;
        r.sum_c_distill += di->c_ballpark;
        tau_e += ex->mean_tau;
        tau_n += nd->mean_tau;
        tau_d += di->mean_tau;
    }
    if (r.settings == 0) {
        return r;
    }
    const auto k = static_cast<double>(r.settings);
    r.mean_n_active_full = n_full / k;
    r.mean_n_active_distill = n_dist / k;
    r.mean_reduction_fraction = red / k;
    r.mean_tau_exact = tau_e / k;
    r.mean_tau_no_distill = tau_n / k;
    r.mean_tau_distill = tau_d / k;
    r.param_reduction =
        r.mean_n_active_full > 0.0 ? 1.0 - r.mean_n_active_distill / r.mean_n_active_full : 0.0;
    if (r.sum_c_exact > 0.0) {
        r.workload_reduction = 1.0 - r.sum_c_distill / r.sum_c_exact;
        r.workload_reduction_no_distill = 1.0 - r.sum_c_no_distill / r.sum_c_exact;
    }
    r.step_reduction =
        r.mean_tau_no_distill > 0.0 ? 1.0 - r.mean_tau_distill / r.mean_tau_no_distill : 0.0;
    return r;
}

void write_table_progression(std::ostream &os, std::span<const CellAggregate> cells,
                             std::size_t w_max, double threshold) {
    const auto settings = settings_of(cells);
    const auto cols = columns_of(settings);
    os << "family,method";
    for (const auto &[p, n] : cols) {
        os << ",p" << p << "_n" << n;
    }
    os << '\n';
    for (auto f : families_of(settings)) {
        for (auto m : {Method::SafeNoDistill, Method::SafeDistill}) {
            os << to_string(f) << ',' << to_string(m);
            for (const auto &[p, n] : cols) {
                const Setting s{f, n, p};
                const auto *c = m == Method::SafeDistill ? find_cell(cells, distill_key(s, w_max, threshold))
                                                         : find_cell(cells, no_distill_key(s, w_max));
                os << ',';
                if (c != nullptr) {
                    const double gain = c->best_alpha_final - c->mean_alpha_step0;
                    os << fixed(c->mean_alpha_step0, 3) << "->" << fixed(c->best_alpha_final, 3)
                       << " (" << (gain >= 0 ? "+" : "") << fixed(gain, 3) << ")";
                }
            }
            os << '\n';
        }
    }
}

void write_table_cost(std::ostream &os, std::span<const CellAggregate> cells,
                      std::size_t w_max, double threshold) {
    const auto settings = settings_of(cells);
    const auto cols = columns_of(settings);
    os << "family,method";
    for (const auto &[p, n] : cols) {
        os << ",p" << p << "_n" << n;
    }
    os << '\n';
    for (auto f : families_of(settings)) {
        for (auto m : {Method::ExactOnly, Method::SafeNoDistill, Method::SafeDistill}) {
            os << to_string(f) << ',' << to_string(m);
            for (const auto &[p, n] : cols) {
                const Setting s{f, n, p};
                const CellAggregate *c = nullptr;
                switch (m) {
                case Method::ExactOnly:
                    c = find_cell(cells, exact_key(s));
                    break;
                case Method::SafeNoDistill:
                    c = find_cell(cells, no_distill_key(s, w_max));
                    break;
                case Method::SafeDistill:
                    c = find_cell(cells, distill_key(s, w_max, threshold));
                    break;
                }
                os << ',';
                if (c == nullptr) {
                    continue;
                }
                os << fixed(c->c_ballpark, 1);
                if (m != Method::ExactOnly) {
                    const auto *ex = find_cell(cells, exact_key(s));
                    if (ex != nullptr && c->c_ballpark > 0.0) {
                        os << " (" << fixed(ex->c_ballpark / c->c_ballpark, 1) << "x)";
                    } else if (ex != nullptr) {
                        os << " (--)";
                    }
                }
            }
            os << '\n';
        }
    }
}

void write_cells_csv(std::ostream &os, std::span<const CellAggregate> cells) {
    os << "family,n,p,method,w_max,threshold,runs,degenerate_runs,mean_alpha_step0,"
          "best_alpha_step0,mean_alpha_final,best_alpha_final,mean_alpha_lwpp,best_alpha_lwpp,"
          "mean_reduction,mean_tau,mean_n_active,c_ballpark,mean_run_c_ballpark,"
          "mean_cost_angle_similarity\n";
    for (const auto &c : cells) {
        os << to_string(c.key.family) << ',' << c.key.n_qubits << ',' << c.key.depth << ','
           << to_string(c.key.method) << ',' << c.key.w_max << ',' << num(c.key.threshold) << ','
           << c.runs << ',' << c.degenerate_runs << ',' << num(c.mean_alpha_step0) << ','
           << num(c.best_alpha_step0) << ',' << num(c.mean_alpha_final) << ','
           << num(c.best_alpha_final) << ',' << opt(c.mean_alpha_lwpp) << ','
           << opt(c.best_alpha_lwpp) << ',' << num(c.mean_reduction) << ',' << num(c.mean_tau)
           << ',' << num(c.mean_n_active) << ',' << num(c.c_ballpark) << ','
           << num(c.mean_run_c_ballpark) << ',' << opt(c.mean_cost_angle_similarity) << '\n';
    }
}

void write_threshold_summary(std::ostream &os, std::span<const CellAggregate> cells) {
    os << "family,n,p,w_max,threshold,mean_alpha_final,best_alpha_final,mean_reduction,"
          "exact_mean_alpha_final,exact_best_alpha_final,lwpp_mean_alpha,lwpp_best_alpha\n";
    for (const auto &c : cells) {
        if (c.key.method == Method::ExactOnly) {
            continue;
        }
        const Setting s{c.key.family, c.key.n_qubits, c.key.depth};
        const auto *ex = find_cell(cells, exact_key(s));
        os << to_string(c.key.family) << ',' << c.key.n_qubits << ',' << c.key.depth << ','
           << c.key.w_max << ',' << num(c.key.threshold) << ',' << num(c.mean_alpha_final) << ','
           << num(c.best_alpha_final) << ',' << num(c.mean_reduction) << ','
           << (ex ? num(ex->mean_alpha_final) : "") << ','
           << (ex ? num(ex->best_alpha_final) : "") << ',' << opt(c.mean_alpha_lwpp) << ','
           << opt(c.best_alpha_lwpp) << '\n';
    }
}

void write_reductions_csv(std::ostream &os, const ReductionStats &r) {
    os << "statistic,value\n"
       << "settings," << r.settings << '\n'
       << "mean_n_active_full," << num(r.mean_n_active_full) << '\n'
       << "mean_n_active_distill," << num(r.mean_n_active_distill) << '\n'
       << "param_reduction," << num(r.param_reduction) << '\n'
       << "mean_reduction_fraction," << num(r.mean_reduction_fraction) << '\n'
       << "sum_c_exact," << num(r.sum_c_exact) << '\n'
       << "sum_c_no_distill," << num(r.sum_c_no_distill) << '\n'
       << "sum_c_distill," << num(r.sum_c_distill) << '\n'
       << "workload_reduction," << num(r.workload_reduction) << '\n'
       << "workload_reduction_no_distill," << num(r.workload_reduction_no_distill) << '\n'
       << "mean_tau_exact," << num(r.mean_tau_exact) << '\n'
       << "mean_tau_no_distill," << num(r.mean_tau_no_distill) << '\n'
       << "mean_tau_distill," << num(r.mean_tau_distill) << '\n'
       << "step_reduction," << num(r.step_reduction) << '\n';
}

void write_summary_csv(std::ostream &os, std::span<const RunSummary> summaries) {
    os << "run_id,family,n,p,method,w_max,threshold,instance,init,alpha_step0,alpha_final,"
          "alpha_best,tau_099,n_params,n_active_before,n_active,c_ballpark,reduction_fraction,"
          "alpha_lwpp,cost_angle_similarity,degenerate\n";
    for (const auto &s : summaries) {
        os << s.id.run_id() << ',' << to_string(s.id.family) << ',' << s.id.n_qubits << ','
           << s.id.depth << ',' << to_string(s.id.method) << ',' << s.id.w_max << ','
           << num(s.id.threshold) << ',' << s.id.instance_index << ',' << s.id.init_label << ','
           << num(s.alpha_step0) << ',' << num(s.alpha_final) << ',' << num(s.alpha_best) << ','
           << s.tau_099 << ',' << s.n_params << ',' << s.n_active_before << ',' << s.n_active
           << ',' << num(s.c_ballpark) << ',' << num(s.reduction_fraction) << ','
           << opt(s.alpha_lwpp) << ',' << opt(s.cost_angle_similarity) << ','
           << (s.degenerate ? 1 : 0) << '\n';
    }
}

} // namespace maqaoa
