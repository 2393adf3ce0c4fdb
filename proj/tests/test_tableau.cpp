// Copyright 2026 The anyonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <bitset>
#include <chrono>
#include <random>

#include "anyonlab/tableau.hpp"
#include "oracle.hpp"

using namespace anyonlab;

namespace {

Circuit random_clifford(std::size_t n, std::size_t depth, std::mt19937_64 &rng) {
    const GateKind one[] = {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg};
    const GateKind two[] = {GateKind::CX, GateKind::CZ, GateKind::Swap};
    Circuit c(n);
    for (std::size_t d = 0; d < depth; ++d) {
        if (n > 1 && rng() % 3 == 0) {
            const std::size_t a = rng() % n;
            std::size_t b = rng() % n;
            while (b == a) b = rng() % n;
            c.add(two[rng() % 3], a, b);
        } else {
            c.add(one[rng() % 6], rng() % n);
        }
    }
    return c;
}

oracle::Mat matrix_of(const PauliString &p) {
    std::string letters;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) letters += p.pauli(q);
    return oracle::pauli_matrix(letters, p.phase());
}

std::size_t tableau_rank(const std::vector<PauliString> &rows) {
    std::vector<std::bitset<64>> bits;
    for (const auto &r : rows) {
        std::bitset<64> b;
        for (std::size_t q = 0; q < r.num_qubits(); ++q) {
            b[q] = r.x(q);
            b[32 + q] = r.z(q);
        }
        bits.push_back(b);
    }
    return oracle::gf2_rank(bits);
}

std::string face_id(std::size_t k, std::size_t r, std::size_t c) { return "B" + std::to_string(1 + r * k + c); }

}  // namespace

TEST(Tableau, StartsInAllZero) {
    Tableau t(3);
    EXPECT_EQ(t.stabilizers()[1].str(), "+Z2");
    EXPECT_EQ(t.destabilizers()[2].str(), "+X3");
    EXPECT_EQ(t.peek(PauliString::parse("Z1 Z3", 3)), 1);
    EXPECT_EQ(t.peek(PauliString::parse("-Z2", 3)), -1);
    EXPECT_FALSE(t.peek(PauliString::parse("X1", 3)).has_value());
}

TEST(Tableau, InvolutionsRestore) {
    Tableau t(4);
    std::mt19937_64 rng(1);
    t.apply(random_clifford(4, 30, rng));
    const Tableau before = t;
    for (GateKind g : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H}) {
        t.apply(Gate{g, {2, 0}});
        t.apply(Gate{g, {2, 0}});
    }
    t.apply(Gate{GateKind::S, {1, 0}});
    t.apply(Gate{GateKind::Sdg, {1, 0}});
    t.apply(Gate{GateKind::CX, {0, 3}});
    t.apply(Gate{GateKind::CX, {0, 3}});
    EXPECT_EQ(t.stabilizers(), before.stabilizers());
    EXPECT_EQ(t.destabilizers(), before.destabilizers());
}

TEST(Tableau, RandomCliffordSignsMatchDense) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        const std::size_t n = 1 + seed % 6;
        const Circuit c = random_clifford(n, 40, rng);
        Tableau t(n);
        t.apply(c);
        const StateVector s = run(c, StateVector(n));
        const oracle::Vec v = oracle::to_eigen(s);
        for (const auto &row : t.stabilizers()) {
            const double dense = (v.adjoint() * matrix_of(row) * v)(0, 0).real();
            EXPECT_NEAR(dense, 1.0, 1e-12) << "seed " << seed << " row " << row.str();
        }
        EXPECT_EQ(tableau_rank(t.stabilizers()), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_TRUE(commutes(t.stabilizers()[i], t.stabilizers()[j]));
                EXPECT_EQ(commutes(t.stabilizers()[i], t.destabilizers()[j]), i != j);
            }
    }
}

TEST(Tableau, CzOnPlusStatesGivesGraphStabilizers) {
    Tableau t(4);
    Circuit c(4);
    for (std::size_t q = 0; q < 4; ++q) c.add(GateKind::H, q);
    c.add(GateKind::CZ, 0, 1).add(GateKind::CZ, 1, 2).add(GateKind::CZ, 1, 3);
    t.apply(c);
    EXPECT_EQ(t.peek(PauliString::parse("X1 Z2", 4)), 1);
    EXPECT_EQ(t.peek(PauliString::parse("Z1 X2 Z3 Z4", 4)), 1);
    EXPECT_EQ(t.peek(PauliString::parse("Z2 X3", 4)), 1);
    EXPECT_EQ(t.peek(PauliString::parse("Z2 X4", 4)), 1);
}

TEST(Tableau, RejectsNonClifford) {
    Tableau t(2);
    EXPECT_THROW(t.apply(Gate{GateKind::Phase, {0, 0}, 0.3}), std::invalid_argument);
    EXPECT_THROW(t.apply(Gate{GateKind::CX, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(t.apply(Gate{GateKind::X, {2, 0}}), std::out_of_range);
    EXPECT_THROW((void)t.peek(PauliString(3)), std::invalid_argument);
    EXPECT_THROW((void)t.peek(PauliString::parse("+i Z1", 2)), std::invalid_argument);
}

TEST(Tableau, MeasurementIsSeededAndCollapses) {
    Tableau a(3), b(3);
    std::mt19937_64 ra(42), rb(42);
    const auto x = PauliString::parse("X1 X2", 3);
    const auto ma = a.measure(x, ra);
    const auto mb = b.measure(x, rb);
    EXPECT_TRUE(ma.random);
    EXPECT_EQ(ma.outcome, mb.outcome);
    const auto again = a.measure(x, ra);
    EXPECT_FALSE(again.random);
    EXPECT_EQ(again.outcome, ma.outcome);
    EXPECT_EQ(a.peek(PauliString::parse("Z1 Z2", 3)), 1);
    EXPECT_FALSE(a.peek(PauliString::parse("Z1", 3)).has_value());
}

TEST(Tableau, PostselectConflict) {
    Tableau t(2);
    EXPECT_THROW(t.postselect(PauliString::parse("Z1", 2), -1), std::domain_error);
    t.postselect(PauliString::parse("X1", 2), -1);
    EXPECT_EQ(t.peek(PauliString::parse("X1", 2)), -1);
    EXPECT_THROW(t.postselect(PauliString::parse("X1", 2), 0), std::invalid_argument);
}

TEST(Tableau, ToStateVectorMatchesDenseRun) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = random_clifford(5, 30, rng);
        Tableau t(5);
        t.apply(c);
        EXPECT_NEAR(std::abs(overlap(to_state_vector(t), run(c, StateVector(5)))), 1.0, 1e-10);
    }
}

TEST(ToricTableau, GroundAllPlusK2) {
    const auto m = build_toric(2);
    const Tableau t = init_toric_ground(m);
    const auto syn = syndrome_sweep(t, m);
    ASSERT_EQ(syn.size(), 8u);
    for (const auto &e : syn) {
        EXPECT_EQ(e.value, 1.0) << e.id;
        EXPECT_TRUE(e.eigenstate);
    }
}

TEST(ToricTableau, DenseConversionMatchesProjector) {
    const auto m = build_toric(2);
    std::vector<oracle::Mat> gens;
    for (const auto &g : m.generators()) gens.push_back(matrix_of(g.op));
    for (const auto &z : toric_logical_z(m)) gens.push_back(matrix_of(z));
    const oracle::Vec ref = oracle::projected_state(gens, 8, 3);
    const oracle::Vec got = oracle::to_eigen(to_state_vector(init_toric_ground(m)));
    EXPECT_NEAR(std::abs(ref.dot(got)), 1.0, 1e-10);
}

TEST(ToricTableau, LogicalSectorsAreOrthogonal) {
    const auto m = build_toric(2);
    std::vector<StateVector> sectors;
    for (bool a : {false, true})
        for (bool b : {false, true}) sectors.push_back(to_state_vector(init_toric_ground(m, {a, b})));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(hamiltonian_energy(m, sectors[i]), -8.0, 1e-10);
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(std::abs(overlap(sectors[i], sectors[j])), 0.0, 1e-10);
    }
}

TEST(ToricTableau, LogicalOperatorAlgebra) {
    const auto m = build_toric(4);
    const auto z = toric_logical_z(m);
    const auto x = toric_logical_x(m);
    for (const auto &g : m.generators()) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_TRUE(commutes(g.op, z[j]));
            EXPECT_TRUE(commutes(g.op, x[j]));
        }
    }
    EXPECT_FALSE(commutes(z[0], x[0]));
    EXPECT_FALSE(commutes(z[1], x[1]));
    EXPECT_TRUE(commutes(z[0], x[1]));
    EXPECT_TRUE(commutes(z[1], x[0]));
    const Tableau t = init_toric_ground(m, {true, false});
    EXPECT_EQ(t.peek(z[0]), -1);
    EXPECT_EQ(t.peek(z[1]), 1);
    EXPECT_THROW(init_toric_ground(build_planar6()), std::invalid_argument);
}

TEST(ToricTableau, SingleEdgeErrorFlipsAdjacentFaces) {
    const std::size_t k = 4;
    const auto m = build_toric(k);
    for (std::size_t q = 0; q < m.num_qubits; ++q) {
        Tableau t = init_toric_ground(m);
        t.apply_pauli(PauliString::single(m.num_qubits, q, 'X'));
        const auto syn = syndrome_sweep(t, m);
        const auto expected = pauli_syndrome(m, PauliString::single(m.num_qubits, q, 'X'));
        ASSERT_EQ(syn.size(), expected.size());
        for (std::size_t i = 0; i < syn.size(); ++i) EXPECT_EQ(syn[i].value, expected[i].value) << syn[i].id;
        EXPECT_EQ(count_defects(syn).face, 2u);
        EXPECT_EQ(count_defects(syn).vertex, 0u);
    }
}

TEST(ToricTableau, OpenStringMovesDefectsToEndpoints) {
    const std::size_t k = 8, col = 3, length = 5;
    const auto m = build_toric(k);
    Tableau t = init_toric_ground(m);
    std::mt19937_64 rng(8);
    // X on h(1,c) .. h(L,c) crosses faces (0,c) .. (L,c); only the end faces
    // see an odd number of flips.
    for (std::size_t r = 1; r <= length; ++r) t.apply_pauli(PauliString::single(m.num_qubits, toric_h(k, r, col), 'X'));
    for (const auto &e : syndrome_sweep(t, m)) {
        const bool endpoint = e.id == face_id(k, 0, col) || e.id == face_id(k, length, col);
        EXPECT_EQ(e.value, endpoint ? -1.0 : 1.0) << e.id;
    }
    const auto b = m.face_ops[1 + 2 * k].op;
    EXPECT_EQ(t.measure(b, rng).outcome, 1);
}

TEST(ToricTableau, RandomErrorsGiveEvenDefectsK16) {
    const auto m = build_toric(16);
    const Tableau ground = init_toric_ground(m);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Tableau t = ground;
        const std::size_t count = 1 + rng() % 40;
        for (std::size_t i = 0; i < count; ++i) {
            t.apply_pauli(PauliString::single(m.num_qubits, rng() % m.num_qubits, "XYZ"[rng() % 3]));
        }
        const auto d = count_defects(syndrome_sweep(t, m));
        EXPECT_EQ(d.face % 2, 0u);
        EXPECT_EQ(d.vertex % 2, 0u);
    }
}

TEST(ToricTableau, SweepBudgetK16) {
    const auto m = build_toric(16);
    const Tableau t = init_toric_ground(m);
    const auto start = std::chrono::steady_clock::now();
    const auto syn = syndrome_sweep(t, m);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(syn.size(), 512u);
    EXPECT_LE(s, 1.0);
}
