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
#include "maqaoa/problems.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "maqaoa/errors.hpp"
#include "maqaoa/rng.hpp"

namespace maqaoa {

namespace {

using nlohmann::json;

void require_size(std::size_t n) {
    if (n < kMinInstanceQubits || n > kMaxInstanceQubits) {
        throw InvalidSizeError("instance size must be in [2, 30], got " +
                               std::to_string(n));
    }
}

std::size_t grid_index(std::size_t r, std::size_t c, std::size_t cols) {
    return r * cols + c;
}

bool has_isolated_vertex(std::size_t n, const std::vector<Edge> &edges) {
    std::vector<bool> touched(n, false);
    for (const auto &e : edges) {
        touched[e.i] = true;
        touched[e.j] = true;
    }
    return std::find(touched.begin(), touched.end(), false) != touched.end();
}

double spin(std::uint64_t bits, std::size_t q) {
    return ((bits >> q) & 1U) ? -1.0 : 1.0;
}

struct ScanResult {
    EnergyExtremes ext;
    bool any{false};
};

ScanResult scan_range(const ProblemInstance &inst, std::uint64_t begin,
                      std::uint64_t end) {
    ScanResult r;
    for (std::uint64_t b = begin; b < end; ++b) {
        const double e = inst.energy(b);
        if (!r.any) {
            r.ext = {e, e, b, b};
            r.any = true;
            continue;
        }
        if (e < r.ext.e_min) {
            r.ext.e_min = e;
            r.ext.argmin = b;
        }
        if (e > r.ext.e_max) {
            r.ext.e_max = e;
            r.ext.argmax = b;
        }
    }
    return r;
}

} // namespace

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::SK:
        return "sk";
    case Family::Grid2D:
        return "grid";
    case Family::MaxCut:
        return "maxcut";
    }
    return "sk";
}

Family parse_family(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sk") {
        return Family::SK;
    }
    if (lower == "grid" || lower == "grid2d" || lower == "2d-grid") {
        return Family::Grid2D;
    }
    if (lower == "maxcut" || lower == "max-cut") {
        return Family::MaxCut;
    }
    throw ParameterError("unknown problem family \"" + std::string(text) + "\"");
}

std::string bitstring(std::uint64_t bits, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((bits >> q) & 1U) {
            s[n_qubits - 1 - q] = '1';
        }
    }
    return s;
}

std::size_t ProblemInstance::field_term_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(local_fields.begin(), local_fields.end(),
                      [](double h) { return h != 0.0; }));
}

std::vector<WeightedPauli> ProblemInstance::cost_terms() const {
    std::vector<WeightedPauli> terms;
    terms.reserve(field_term_count() + edges.size());
    for (std::size_t q = 0; q < local_fields.size(); ++q) {
        if (local_fields[q] != 0.0) {
            terms.push_back({PauliString::single(n_qubits, q, PauliOp::Z),
                             local_fields[q]});
        }
    }
    for (const auto &e : edges) {
        terms.push_back({PauliString::from_ops(n_qubits, {{e.i, PauliOp::Z},
                                                          {e.j, PauliOp::Z}}),
                         e.coupling});
    }
    return terms;
}

PauliSum ProblemInstance::hamiltonian() const {
    PauliSum h(n_qubits);
    for (const auto &t : cost_terms()) {
        h.add(t);
    }
    return h;
}

double ProblemInstance::energy(std::uint64_t bits) const {
    double e = 0.0;
    for (std::size_t q = 0; q < local_fields.size(); ++q) {
        e += local_fields[q] * spin(bits, q);
    }
    for (const auto &edge : edges) {
        e += edge.coupling * spin(bits, edge.i) * spin(bits, edge.j);
    }
    return e;
}

ProblemInstance generate_sk(std::size_t n, std::uint64_t seed) {
    require_size(n);
    ProblemInstance inst;
    inst.family = Family::SK;
    inst.n_qubits = n;
    inst.seed = seed;
    inst.local_fields.assign(n, 0.0);
    CounterRng rng(seed);
    const double stddev = 1.0 / std::sqrt(static_cast<double>(n));
    inst.edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            inst.edges.push_back({i, j, rng.normal(0.0, stddev)});
        }
    }
    return inst;
}

ProblemInstance generate_grid2d(std::size_t rows, std::size_t cols,
                                std::uint64_t seed) {
    if (rows < 2 || cols < 2) {
        throw InvalidSizeError("grid must be at least 2x2, got " +
                               std::to_string(rows) + "x" + std::to_string(cols));
    }
    require_size(rows * cols);
    const std::size_t n = rows * cols;

    struct Bond {
        std::size_t i, j;
        double stddev;
    };
    std::vector<Bond> bonds;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto here = grid_index(r, c, cols);
            if (c + 1 < cols) {
                bonds.push_back({here, grid_index(r, c + 1, cols), 1.0});
            }
            if (r + 1 < rows) {
                bonds.push_back({here, grid_index(r + 1, c, cols), 1.0});
            }
            if (r + 1 < rows && c + 1 < cols) {
                bonds.push_back({here, grid_index(r + 1, c + 1, cols), 0.3});
                bonds.push_back({grid_index(r, c + 1, cols),
                                 grid_index(r + 1, c, cols), 0.3});
            }
        }
    }
    for (auto &b : bonds) {
        if (b.i > b.j) {
            std::swap(b.i, b.j);
        }
    }
    std::sort(bonds.begin(), bonds.end(), [](const Bond &a, const Bond &b) {
        return std::pair{a.i, a.j} < std::pair{b.i, b.j};
    });

    ProblemInstance inst;
    inst.family = Family::Grid2D;
    inst.n_qubits = n;
    inst.seed = seed;
    inst.grid_shape = std::pair{rows, cols};
    CounterRng rng(seed);
    inst.local_fields.resize(n);
    for (auto &h : inst.local_fields) {
        h = rng.normal(0.0, 0.1);
    }
    inst.edges.reserve(bonds.size());
    for (const auto &b : bonds) {
        inst.edges.push_back({b.i, b.j, rng.normal(0.0, b.stddev)});
    }
    return inst;
}

ProblemInstance generate_maxcut(std::size_t n, double edge_prob,
                                std::uint64_t seed) {
    require_size(n);
    if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
        throw ParameterError("Max-Cut edge probability must be in (0, 1]");
    }
    ProblemInstance inst;
    inst.family = Family::MaxCut;
    inst.n_qubits = n;
    inst.seed = seed;
    inst.local_fields.assign(n, 0.0);
    for (std::size_t attempt = 0;; ++attempt) {
        CounterRng rng(attempt == 0 ? seed : derive_seed({seed, attempt}));
        inst.edges.clear();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng.uniform() < edge_prob) {
                    inst.edges.push_back({i, j, 1.0});
                }
            }
        }
        if (!inst.edges.empty() && !has_isolated_vertex(n, inst.edges)) {
            inst.resample_count = attempt;
            return inst;
        }
    }
}

std::pair<std::size_t, std::size_t> grid_shape_for(std::size_t n) {
    if (n == 12) {
        return {3, 4};
    }
    if (n == 16) {
        return {4, 4};
    }
    if (n == 20) {
        return {4, 5};
    }
    for (auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
         r >= 2; --r) {
        if (n % r == 0 && n / r >= 2) {
            return {r, n / r};
        }
    }
    throw InvalidSizeError("no rows x cols grid with both sides >= 2 has " +
                           std::to_string(n) + " sites");
}

ProblemInstance generate_instance(Family family, std::size_t n,
                                  std::uint64_t seed, double maxcut_edge_prob) {
    switch (family) {
    case Family::SK:
        return generate_sk(n, seed);
    case Family::Grid2D: {
        const auto [rows, cols] = grid_shape_for(n);
        return generate_grid2d(rows, cols, seed);
    }
    case Family::MaxCut:
        return generate_maxcut(n, maxcut_edge_prob, seed);
    }
    throw ParameterError("unknown family");
}

EnergyExtremes brute_force_extremes(const ProblemInstance &inst,
                                    unsigned workers) {
    if (inst.n_qubits > kBruteForceGuard) {
        throw InvalidSizeError("brute force refused above " +
                               std::to_string(kBruteForceGuard) + " qubits");
    }
    if (inst.n_qubits == 0) {
        throw InvalidSizeError("brute force on an empty instance");
    }
    const std::uint64_t total = std::uint64_t{1} << inst.n_qubits;
    workers = std::max(1U, workers);
    if (total < (std::uint64_t{1} << 14)) {
        workers = 1;
    }
    std::vector<ScanResult> parts(workers);
    {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(total, w * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                parts[w] = scan_range(inst, begin, end);
            });
        }
    }
    // Parts are ordered by index range, so strict comparisons keep the
    // lowest-index argmin/argmax regardless of the split.
    ScanResult merged;
    for (const auto &p : parts) {
        if (!p.any) {
            continue;
        }
        if (!merged.any) {
            merged = p;
            continue;
        }
        if (p.ext.e_min < merged.ext.e_min) {
            merged.ext.e_min = p.ext.e_min;
            merged.ext.argmin = p.ext.argmin;
        }
        if (p.ext.e_max > merged.ext.e_max) {
            merged.ext.e_max = p.ext.e_max;
            merged.ext.argmax = p.ext.argmax;
        }
    }
    return merged.ext;
}

ProblemInstance with_extremes(ProblemInstance inst, unsigned workers) {
    inst.extremes = brute_force_extremes(inst, workers);
    return inst;
}

std::vector<double> energy_table(const ProblemInstance &inst) {
    if (inst.n_qubits > kBruteForceGuard) {
        throw InvalidSizeError("energy table refused above guard");
    }
    const std::uint64_t total = std::uint64_t{1} << inst.n_qubits;
    std::vector<double> table(total);
    for (std::uint64_t b = 0; b < total; ++b) {
        table[b] = inst.energy(b);
    }
    return table;
}

std::size_t cut_value(const ProblemInstance &inst, std::uint64_t bits) {
    std::size_t cut = 0;
    for (const auto &e : inst.edges) {
        if (((bits >> e.i) ^ (bits >> e.j)) & 1U) {
            ++cut;
        }
    }
    return cut;
}

std::string to_json(const ProblemInstance &inst) {
    json j;
    j["family"] = to_string(inst.family);
    j["n"] = inst.n_qubits;
    j["seed"] = inst.seed;
    if (inst.grid_shape) {
        j["grid_shape"] = {inst.grid_shape->first, inst.grid_shape->second};
    } else {
        j["grid_shape"] = nullptr;
    }
    j["fields"] = inst.local_fields;
    json edges = json::array();
    for (const auto &e : inst.edges) {
        edges.push_back({e.i, e.j, e.coupling});
    }
    j["edges"] = std::move(edges);
    j["resample_count"] = inst.resample_count;
    if (inst.extremes) {
        j["extremes"] = {
            {"e_min", inst.extremes->e_min},
            {"e_max", inst.extremes->e_max},
            {"argmin", inst.extremes->argmin},
            {"argmax", inst.extremes->argmax},
            {"argmin_bitstring", bitstring(inst.extremes->argmin, inst.n_qubits)},
        };
    } else {
        j["extremes"] = nullptr;
    }
    return j.dump(2) + "\n";
}

ProblemInstance instance_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &ex) {
        throw ParseError(std::string("instance JSON: ") + ex.what());
    }
    try {
        ProblemInstance inst;
        inst.family = parse_family(j.at("family").get<std::string>());
        inst.n_qubits = j.at("n").get<std::size_t>();
        require_size(inst.n_qubits);
        inst.seed = j.at("seed").get<std::uint64_t>();
        if (!j.at("grid_shape").is_null()) {
            inst.grid_shape = std::pair{j["grid_shape"].at(0).get<std::size_t>(),
                                        j["grid_shape"].at(1).get<std::size_t>()};
        }
        inst.local_fields = j.at("fields").get<std::vector<double>>();
        if (inst.local_fields.size() != inst.n_qubits) {
            throw ParseError("fields array length differs from n");
        }
        for (const auto &e : j.at("edges")) {
            Edge edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                      e.at(2).get<double>()};
            if (!(edge.i < edge.j && edge.j < inst.n_qubits)) {
                throw ParseError("edge (" + std::to_string(edge.i) + ", " +
                                 std::to_string(edge.j) + ") violates i < j < n");
            }
            inst.edges.push_back(edge);
        }
        inst.resample_count = j.value("resample_count", std::size_t{0});
        if (j.contains("extremes") && !j["extremes"].is_null()) {
            const auto &x = j["extremes"];
            inst.extremes = EnergyExtremes{
                x.at("e_min").get<double>(), x.at("e_max").get<double>(),
                x.at("argmin").get<std::uint64_t>(),
                x.at("argmax").get<std::uint64_t>()};
        }
        return inst;
    } catch (const json::exception &ex) {
        throw ParseError(std::string("instance JSON: ") + ex.what());
    }
}

} // namespace maqaoa
