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

#include "anyonlab/tableau.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonlab {

namespace {

// Parity of the symplectic product restricted to `support`, which must cover
// every qubit where `p` is non-identity.
bool anticommutes_on(const PauliString &row, const PauliString &p, const std::vector<std::size_t> &support) {
    bool parity = false;
    for (std::size_t q : support) {
        parity ^= (row.x(q) && p.z(q)) != (row.z(q) && p.x(q));
    }
    return parity;
}

void flip_sign(PauliString &row) { row.multiply_phase(2); }

template <typename F>
void for_each_row(std::vector<PauliString> &a, std::vector<PauliString> &b, F &&f) {
    for (auto &row : a) f(row);
    for (auto &row : b) f(row);
}

}  // namespace

Tableau::Tableau(std::size_t num_qubits) : num_qubits_(num_qubits) {
    stabilizers_.reserve(num_qubits);
    destabilizers_.reserve(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        stabilizers_.push_back(PauliString::single(num_qubits, q, 'Z'));
        destabilizers_.push_back(PauliString::single(num_qubits, q, 'X'));
    }
}

void Tableau::require_size(const PauliString &p, const char *what) const {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument(std::string(what) + ": Pauli has " + std::to_string(p.num_qubits()) +
                                    " qubits, tableau has " + std::to_string(num_qubits_));
    }
}

void Tableau::apply(const Gate &gate) {
    const std::size_t a = gate.targets[0];
    const std::size_t arity = gate_arity(gate.kind);
    if (a >= num_qubits_ || (arity == 2 && gate.targets[1] >= num_qubits_)) {
        throw std::out_of_range(std::string(gate_name(gate.kind)) + ": target outside tableau");
    }
    if (arity == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": targets must be distinct");
    }
    const std::size_t b = gate.targets[1];
    switch (gate.kind) {
        case GateKind::X:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                if (r.z(a)) flip_sign(r);
            });
            return;
        case GateKind::Y:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                if (r.x(a) != r.z(a)) flip_sign(r);
            });
            return;
        case GateKind::Z:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                if (r.x(a)) flip_sign(r);
            });
            return;
        case GateKind::H:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool x = r.x(a), z = r.z(a);
                if (x && z) flip_sign(r);
                r.set_xz(a, z, x);
            });
            return;
        case GateKind::S:
            // X -> Y, Y -> -X
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool x = r.x(a), z = r.z(a);
                if (x && z) flip_sign(r);
                r.set_xz(a, x, z != x);
            });
            return;
        case GateKind::Sdg:
            // X -> -Y, Y -> X
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool x = r.x(a), z = r.z(a);
                if (x && !z) flip_sign(r);
                r.set_xz(a, x, z != x);
            });
            return;
        case GateKind::Phase:
            throw std::invalid_argument("tableau backend supports Clifford gates only (got PHASE)");
        case GateKind::CX:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool xc = r.x(a), zc = r.z(a), xt = r.x(b), zt = r.z(b);
                if (xc && zt && (xt == zc)) flip_sign(r);
                r.set_xz(b, xt != xc, zt);
                r.set_xz(a, xc, zc != zt);
            });
            return;
        case GateKind::CZ:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool xa = r.x(a), za = r.z(a), xb = r.x(b), zb = r.z(b);
                if (xa && xb && (za != zb)) flip_sign(r);
                r.set_xz(a, xa, za != xb);
                r.set_xz(b, xb, zb != xa);
            });
            return;
        case GateKind::Swap:
            for_each_row(stabilizers_, destabilizers_, [&](PauliString &r) {
                const bool xa = r.x(a), za = r.z(a);
                r.set_xz(a, r.x(b), r.z(b));
                r.set_xz(b, xa, za);
            });
            return;
    }
}

void Tableau::apply(const Circuit &circuit) {
    if (circuit.num_qubits() != num_qubits_) {
        throw std::invalid_argument("tableau run: circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits, tableau has " + std::to_string(num_qubits_));
    }
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

void Tableau::apply_pauli(const PauliString &p) {
    require_size(p, "apply_pauli");
    const auto support = p.support();
    for (auto &row : stabilizers_) {
        if (anticommutes_on(row, p, support)) flip_sign(row);
    }
}

std::optional<std::size_t> Tableau::first_anticommuting_stabilizer(const PauliString &p,
                                                                   const std::vector<std::size_t> &support) const {
    for (std::size_t i = 0; i < stabilizers_.size(); ++i) {
        if (anticommutes_on(stabilizers_[i], p, support)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<int> Tableau::peek(const PauliString &p) const {
    require_size(p, "peek");
    if (!p.is_hermitian()) {
        throw std::invalid_argument("peek: " + p.str() + " is not Hermitian");
    }
    const auto support = p.support();
    if (first_anticommuting_stabilizer(p, support)) {
        return std::nullopt;
    }
    // p commutes with the whole group, so p = +-prod{stab_j : destab_j anticommutes with p}.
    PauliString product(num_qubits_);
    for (std::size_t j = 0; j < destabilizers_.size(); ++j) {
        if (anticommutes_on(destabilizers_[j], p, support)) {
            product *= stabilizers_[j];
        }
    }
    PauliString unsigned_p = p;
    unsigned_p.multiply_phase(4 - p.phase_exponent());
    PauliString unsigned_product = product;
    unsigned_product.multiply_phase(4 - product.phase_exponent());
    if (!(unsigned_p == unsigned_product)) {
        throw std::logic_error("peek: tableau rows do not span a commuting Pauli; tableau is corrupt");
    }
    const unsigned relative = (p.phase_exponent() + 4 - product.phase_exponent()) & 3u;
    if (relative & 1u) {
        throw std::logic_error("peek: non-Hermitian stabilizer product");
    }
    return relative == 0 ? 1 : -1;
}

void Tableau::project(const PauliString &p, std::size_t pivot, int outcome) {
    const auto support = p.support();
    const PauliString pivot_row = stabilizers_[pivot];
    for (std::size_t i = 0; i < stabilizers_.size(); ++i) {
        if (i != pivot && anticommutes_on(stabilizers_[i], p, support)) {
            stabilizers_[i] *= pivot_row;
        }
    }
    for (std::size_t i = 0; i < destabilizers_.size(); ++i) {
        if (i != pivot && anticommutes_on(destabilizers_[i], p, support)) {
            destabilizers_[i] *= pivot_row;
        }
    }
    destabilizers_[pivot] = pivot_row;
    stabilizers_[pivot] = outcome > 0 ? p : -p;
}

MeasureResult Tableau::measure(const PauliString &p, std::mt19937_64 &rng) {
    if (auto value = peek(p)) {
        return {*value, false};
    }
    const auto pivot = first_anticommuting_stabilizer(p, p.support());
    const int outcome = std::bernoulli_distribution(0.5)(rng) ? -1 : 1;
    project(p, *pivot, outcome);
    return {outcome, true};
}

void Tableau::postselect(const PauliString &p, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("postselect: outcome must be +1 or -1");
    }
    if (auto value = peek(p)) {
        if (*value != outcome) {
            throw std::domain_error("postselect: " + p.str() + " is fixed at " + std::to_string(*value));
        }
        return;
    }
    const auto pivot = first_anticommuting_stabilizer(p, p.support());
    project(p, *pivot, outcome);
}

std::array<PauliString, 2> toric_logical_z(const LatticeModel &m) {
    if (m.geometry != Geometry::torus) {
        throw std::invalid_argument("toric logical operators need a torus model");
    }
    PauliString row(m.num_qubits), column(m.num_qubits);
    for (std::size_t i = 0; i < m.k; ++i) {
        row.set(toric_h(m.k, 0, i), 'Z');
        column.set(toric_v(m.k, i, 0), 'Z');
    }
    return {row, column};
}

std::array<PauliString, 2> toric_logical_x(const LatticeModel &m) {
    if (m.geometry != Geometry::torus) {
        throw std::invalid_argument("toric logical operators need a torus model");
    }
    PauliString crosses_row(m.num_qubits), crosses_column(m.num_qubits);
    for (std::size_t i = 0; i < m.k; ++i) {
        crosses_row.set(toric_h(m.k, i, 0), 'X');
        crosses_column.set(toric_v(m.k, 0, i), 'X');
    }
    return {crosses_row, crosses_column};
}

Tableau init_toric_ground(const LatticeModel &m, std::array<bool, 2> logical) {
    if (m.geometry != Geometry::torus) {
        throw std::invalid_argument("init_toric_ground: model " + m.name() + " is not a torus");
    }
    Tableau t(m.num_qubits);
    // From |0...0> every Z-type operator is already +1; each independent A_v
    // is random and gets projected to +1. The dependent one is then fixed.
    for (const auto &g : m.generators()) {
        t.postselect(g.op, +1);
    }
    const auto zs = toric_logical_z(m);
    const auto xs = toric_logical_x(m);
    for (std::size_t j = 0; j < 2; ++j) {
        t.postselect(zs[j], +1);
        if (logical[j]) {
            t.apply_pauli(xs[j]);
        }
    }
    return t;
}

std::vector<SyndromeEntry> syndrome_sweep(const Tableau &t, const LatticeModel &m) {
    if (t.num_qubits() != m.num_qubits) {
        throw std::invalid_argument("syndrome_sweep: qubit count mismatch");
    }
    std::vector<SyndromeEntry> out;
    out.reserve(m.vertex_ops.size() + m.face_ops.size());
    auto sweep = [&](const std::vector<Generator> &ops) {
        for (const auto &g : ops) {
            const auto value = t.peek(g.op);
            out.push_back({g.id, value ? static_cast<double>(*value) : 0.0, value.has_value()});
        }
    };
    sweep(m.vertex_ops);
    sweep(m.face_ops);
    return out;
}

StateVector to_state_vector(const Tableau &t, std::size_t dense_limit) {
    const std::size_t n = t.num_qubits();
    if (n > dense_limit) {
        throw std::length_error("to_state_vector: " + std::to_string(n) + " qubits exceeds dense limit " +
                                std::to_string(dense_limit));
    }
    // Apply prod_i (1 + S_i)/2 to basis states until one survives.
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        StateVector s = StateVector::basis(basis_label(b, n), dense_limit);
        bool survived = true;
        for (const auto &row : t.stabilizers()) {
            StateVector image = apply_pauli(s, row);
            std::vector<Complex> sum(s.dim());
            double norm = 0.0;
            for (std::size_t k = 0; k < sum.size(); ++k) {
                sum[k] = s.amplitude(k) + image.amplitude(k);
                norm += std::norm(sum[k]);
            }
            if (norm < 1e-12) {
                survived = false;
                break;
            }
            const double inv = 1.0 / std::sqrt(norm);
            for (auto &a : sum) {
                a *= inv;
            }
            s = StateVector::from_amplitudes(std::move(sum), dense_limit);
        }
        if (survived) {
            return s;
        }
    }
    throw std::logic_error("to_state_vector: stabilizer group has no +1 eigenvector");
}

}  // namespace anyonlab
