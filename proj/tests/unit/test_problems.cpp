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
#include <set>

#include "dense.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/problems.hpp"
#include "maqaoa/rng.hpp"

namespace maqaoa {
namespace {

ProblemInstance manual(std::size_t n, std::vector<double> fields, std::vector<Edge> edges) {
    ProblemInstance inst;
    inst.family = Family::SK;
    inst.n_qubits = n;
    inst.local_fields = std::move(fields);
    inst.edges = std::move(edges);
    return inst;
}

double direct_energy(const ProblemInstance &inst, std::uint64_t bits) {
    auto spin = [&](std::size_t q) { return ((bits >> q) & 1U) != 0 ? -1.0 : 1.0; };
    double e = 0.0;
    for (std::size_t q = 0; q < inst.n_qubits; ++q) {
        e += inst.local_fields[q] * spin(q);
    }
    for (const auto &edge : inst.edges) {
        e += edge.coupling * spin(edge.i) * spin(edge.j);
    }
    return e;
}

TEST(Problems, SkTermCounts) {
    const auto a = generate_sk(12, 3);
    EXPECT_EQ(a.edges.size(), 66u);
    EXPECT_EQ(a.field_term_count(), 0u);
    EXPECT_EQ(generate_sk(20, 3).edges.size(), 190u);
    for (double h : a.local_fields) {
        EXPECT_EQ(h, 0.0);
    }
}

TEST(Problems, SkCouplingScale) {
    const auto inst = generate_sk(30, 17);
    double s2 = 0.0;
    for (const auto &e : inst.edges) {
        s2 += e.coupling * e.coupling;
    }
    const double var = s2 / static_cast<double>(inst.edges.size());
    // 435 samples of N(0, 1/30): the sample variance lies well within 30%.
    EXPECT_NEAR(var * 30.0, 1.0, 0.3);
}

TEST(Problems, GenerationIsDeterministic) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto a = generate_instance(f, 12, 99);
        const auto b = generate_instance(f, 12, 99);
        EXPECT_EQ(a, b);
        EXPECT_EQ(to_json(a), to_json(b));
        EXPECT_NE(generate_instance(f, 12, 100), a);
    }
}

TEST(Problems, GridCounts) {
    struct Case {
        std::size_t rows, cols, nn, nnn;
    };
    for (const auto &c : {Case{3, 4, 17, 12}, Case{4, 4, 24, 18}, Case{4, 5, 31, 24}}) {
        const auto inst = generate_grid2d(c.rows, c.cols, 5);
        EXPECT_EQ(inst.edges.size(), c.nn + c.nnn);
        EXPECT_EQ(inst.local_fields.size(), c.rows * c.cols);
        std::size_t nn = 0;
        for (const auto &e : inst.edges) {
            const auto ri = e.i / c.cols, ci = e.i % c.cols;
            const auto rj = e.j / c.cols, cj = e.j % c.cols;
            const auto dr = rj > ri ? rj - ri : ri - rj;
            const auto dc = cj > ci ? cj - ci : ci - cj;
            EXPECT_LE(dr, 1u);
            EXPECT_LE(dc, 1u);
            nn += (dr + dc == 1) ? 1 : 0;
        }
        EXPECT_EQ(nn, c.nn);
    }
    const auto inst = generate_instance(Family::Grid2D, 12, 1);
    EXPECT_EQ(inst.cost_terms().size(), 41u);
    EXPECT_EQ(grid_shape_for(12), std::make_pair(std::size_t{3}, std::size_t{4}));
    EXPECT_EQ(grid_shape_for(16), std::make_pair(std::size_t{4}, std::size_t{4}));
    EXPECT_EQ(grid_shape_for(20), std::make_pair(std::size_t{4}, std::size_t{5}));
}

TEST(Problems, MaxCutStructure) {
    EXPECT_EQ(generate_maxcut(12, 1.0, 4).edges.size(), 66u);
    std::size_t total = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto inst = generate_maxcut(12, 0.3, s);
        total += inst.edges.size();
        std::set<std::size_t> touched;
        for (const auto &e : inst.edges) {
            EXPECT_EQ(e.coupling, 1.0);
            EXPECT_LT(e.i, e.j);
            touched.insert(e.i);
            touched.insert(e.j);
        }
        EXPECT_EQ(touched.size(), 12u);
        for (double h : inst.local_fields) {
            EXPECT_EQ(h, 0.0);
        }
    }
    // Mean edge count near 0.3 * 66 = 19.8.
    EXPECT_NEAR(static_cast<double>(total) / 40.0, 19.8, 2.5);
}

TEST(Problems, MaxCutResamplesSparseGraphs) {
    const auto inst = generate_maxcut(6, 0.1, 2);
    std::set<std::size_t> touched;
    for (const auto &e : inst.edges) {
        touched.insert(e.i);
        touched.insert(e.j);
    }
    EXPECT_EQ(touched.size(), 6u);
    EXPECT_GT(inst.resample_count, 0u);
}

TEST(Problems, EdgesAreLexicographic) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 12, 8);
        for (std::size_t k = 1; k < inst.edges.size(); ++k) {
            const auto &a = inst.edges[k - 1];
            const auto &b = inst.edges[k];
            EXPECT_TRUE(a.i < b.i || (a.i == b.i && a.j < b.j));
        }
    }
}

TEST(Problems, SmallExtremes) {
    const auto zz = brute_force_extremes(manual(2, {0.0, 0.0}, {{0, 1, 1.0}}));
    EXPECT_EQ(zz.e_min, -1.0);
    EXPECT_EQ(zz.e_max, 1.0);
    EXPECT_EQ(bitstring(zz.argmin, 2), "01");
    const auto z = brute_force_extremes(manual(2, {1.0, 0.0}, {}));
    EXPECT_EQ(z.e_min, -1.0);
    EXPECT_EQ(z.e_max, 1.0);
    const auto tri = generate_maxcut(3, 1.0, 0);
    const auto t = brute_force_extremes(tri);
    EXPECT_EQ(t.e_min, -1.0);
    EXPECT_EQ(t.e_max, 3.0);
}

TEST(Problems, HamiltonianMatchesDirectFormula) {
    CounterRng rng(3);
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 12, 21);
        const auto h = inst.hamiltonian();
        for (int t = 0; t < 100; ++t) {
            const std::uint64_t bits = rng.next_u64() & 0xFFFU;
            EXPECT_NEAR(h.diagonal_value(bits), direct_energy(inst, bits), 1e-12);
            EXPECT_NEAR(inst.energy(bits), direct_energy(inst, bits), 1e-12);
        }
    }
}

TEST(Problems, ExtremesMatchDenseDiagonal) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = generate_instance(f, 6, 4);
        const auto m = testing::dense(inst.hamiltonian());
        double lo = INFINITY;
        double hi = -INFINITY;
        for (std::size_t b = 0; b < m.dim; ++b) {
            lo = std::min(lo, m(b, b).real());
            hi = std::max(hi, m(b, b).real());
        }
        const auto ex = brute_force_extremes(inst);
        EXPECT_NEAR(ex.e_min, lo, 1e-12);
        EXPECT_NEAR(ex.e_max, hi, 1e-12);
        EXPECT_LE(ex.e_min, ex.e_max);
    }
}

TEST(Problems, ExtremesIndependentOfWorkerCount) {
    const auto inst = generate_instance(Family::SK, 14, 6);
    const auto a = brute_force_extremes(inst, 1);
    EXPECT_EQ(a, brute_force_extremes(inst, 3));
    EXPECT_EQ(a, brute_force_extremes(inst, 8));
    EXPECT_EQ(inst.energy(a.argmin), a.e_min);
    EXPECT_EQ(inst.energy(a.argmax), a.e_max);
}

TEST(Problems, MaxCutIdentity) {
    const auto inst = generate_instance(Family::MaxCut, 10, 3);
    const double m = static_cast<double>(inst.edges.size());
    for (std::uint64_t b = 0; b < 1024; ++b) {
        EXPECT_EQ(static_cast<double>(cut_value(inst, b)), (m - inst.energy(b)) / 2.0);
    }
}

TEST(Problems, EnergyTableMatchesEnergy) {
    const auto inst = generate_instance(Family::Grid2D, 8, 2);
    const auto table = energy_table(inst);
    ASSERT_EQ(table.size(), 256u);
    for (std::uint64_t b = 0; b < 256; ++b) {
        EXPECT_NEAR(table[b], inst.energy(b), 1e-12);
    }
}

TEST(Problems, JsonRoundTrip) {
    for (auto f : {Family::SK, Family::Grid2D, Family::MaxCut}) {
        const auto inst = with_extremes(generate_instance(f, 8, 12));
        const auto text = to_json(inst);
        const auto back = instance_from_json(text);
        EXPECT_EQ(back, inst);
        EXPECT_EQ(to_json(back), text);
    }
    EXPECT_THROW((void)instance_from_json("{}"), ParseError);
    EXPECT_THROW((void)instance_from_json("not json"), ParseError);
}

TEST(Problems, SizeGuards) {
    EXPECT_THROW((void)generate_sk(1, 0), InvalidSizeError);
    EXPECT_THROW((void)generate_sk(31, 0), InvalidSizeError);
    EXPECT_THROW((void)generate_maxcut(8, 1.5, 0), ParameterError);
    EXPECT_THROW((void)parse_family("cube"), ParameterError);
    EXPECT_EQ(parse_family("grid"), Family::Grid2D);
}

} // namespace
} // namespace maqaoa
