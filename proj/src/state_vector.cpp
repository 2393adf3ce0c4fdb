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

#include "anyonlab/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace anyonlab {

namespace {

void check_limit(std::size_t n, std::size_t dense_limit) {
    if (n > dense_limit) {
        throw std::length_error("state vector of " + std::to_string(n) + " qubits exceeds dense limit " +
                                std::to_string(dense_limit) + "; use the tableau backend");
    }
}

void require_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

struct PauliAction {
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    Complex base;  // prefix times i^{#Y}
};

// P|c> = base * (-1)^{|z & c|} |c ^ x>.
PauliAction pauli_action(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    PauliAction a;
    unsigned ys = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        if (p.x(q)) a.xmask |= bit;
        if (p.z(q)) a.zmask |= bit;
        if (p.x(q) && p.z(q)) ++ys;
    }
    PauliString unit(0);
    unit.multiply_phase(p.phase_exponent() + ys);
    a.base = unit.phase();
    return a;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::size_t dense_limit) : num_qubits_(num_qubits) {
    check_limit(num_qubits, dense_limit);
    amps_.assign(std::size_t{1} << num_qubits, Complex(0, 0));
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(std::string_view label, std::size_t dense_limit) {
    StateVector s(label.size(), dense_limit);
    s.amps_[0] = 0.0;
    s.amps_[basis_index(label)] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps, std::size_t dense_limit) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    check_limit(n, dense_limit);
    StateVector s(n, std::move(amps));
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

Complex StateVector::amplitude(std::string_view label) const {
    require_same_size(label.size(), num_qubits_, "amplitude");
    return amps_[basis_index(label)];
}

void StateVector::require_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit + 1) + " outside 1.." + std::to_string(num_qubits_));
    }
}

void StateVector::apply_1q(std::size_t qubit, Complex m00, Complex m01, Complex m10, Complex m11) {
    const std::uint64_t bit = bit_of(qubit);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | bit];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[i | bit] = m10 * a0 + m11 * a1;
    }
}

void StateVector::apply(const Gate &gate) {
    const std::size_t a = gate.targets[0];
    require_qubit(a);
    const Complex i(0, 1);
    switch (gate.kind) {
        case GateKind::X: apply_1q(a, 0, 1, 1, 0); return;
        case GateKind::Y: apply_1q(a, 0, -i, i, 0); return;
        case GateKind::Z: apply_1q(a, 1, 0, 0, -1); return;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            apply_1q(a, r, r, r, -r);
            return;
        }
        case GateKind::S: apply_1q(a, 1, 0, 0, i); return;
        case GateKind::Sdg: apply_1q(a, 1, 0, 0, -i); return;
        case GateKind::Phase: apply_1q(a, 1, 0, 0, std::polar(1.0, gate.angle)); return;
        default: break;
    }
    const std::size_t b = gate.targets[1];
    require_qubit(b);
    if (a == b) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": targets must be distinct");
    }
    const std::uint64_t ba = bit_of(a), bb = bit_of(b);
    switch (gate.kind) {
        case GateKind::CX:
            for (std::uint64_t k = 0; k < amps_.size(); ++k) {
                if ((k & ba) && !(k & bb)) {
                    std::swap(amps_[k], amps_[k | bb]);
                }
            }
            return;
        case GateKind::CZ:
            for (std::uint64_t k = 0; k < amps_.size(); ++k) {
                if ((k & ba) && (k & bb)) {
                    amps_[k] = -amps_[k];
                }
            }
            return;
        case GateKind::Swap:
            for (std::uint64_t k = 0; k < amps_.size(); ++k) {
                if ((k & ba) && !(k & bb)) {
                    std::swap(amps_[k], amps_[(k & ~ba) | bb]);
                }
            }
            return;
        default: throw std::logic_error("unhandled gate kind");
    }
}

void StateVector::apply(const Circuit &circuit) {
    require_same_size(circuit.num_qubits(), num_qubits_, "run");
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    require_same_size(p.num_qubits(), num_qubits_, "apply_pauli");
    const PauliAction act = pauli_action(p);
    std::vector<Complex> out(amps_.size());
    for (std::uint64_t c = 0; c < amps_.size(); ++c) {
        const bool odd = std::popcount(act.zmask & c) & 1;
        out[c ^ act.xmask] = (odd ? -act.base : act.base) * amps_[c];
    }
    amps_ = std::move(out);
}

void StateVector::apply_pauli_rotation(const PauliString &p, double theta) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("apply_pauli_rotation: generator must be Hermitian");
    }
    StateVector rotated = *this;
    rotated.apply_pauli(p);
    const double c = std::cos(theta);
    const Complex minus_i_s(0, -std::sin(theta));
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        amps_[k] = c * amps_[k] + minus_i_s * rotated.amps_[k];
    }
}

void StateVector::scale(Complex factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::string basis_label(std::uint64_t index, std::size_t num_qubits) {
    std::string out(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> (num_qubits - 1 - q)) & 1u) {
            out[q] = '1';
        }
    }
    return out;
}

std::uint64_t basis_index(std::string_view label) {
    if (label.size() > 63) {
        throw std::length_error("basis label too long");
    }
    std::uint64_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis label must contain only 0 and 1: \"" + std::string(label) + "\"");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

StateVector apply_gate(StateVector s, const Gate &gate) {
    s.apply(gate);
    return s;
}

StateVector apply_pauli(StateVector s, const PauliString &p) {
    s.apply_pauli(p);
    return s;
}

StateVector run(const Circuit &circuit, StateVector s0) {
    s0.apply(circuit);
    return s0;
}

Complex overlap(const StateVector &a, const StateVector &b) {
    require_same_size(a.num_qubits(), b.num_qubits(), "overlap");
    Complex total = 0.0;
    const auto aa = a.amplitudes(), bb = b.amplitudes();
    for (std::size_t k = 0; k < aa.size(); ++k) {
        total += std::conj(aa[k]) * bb[k];
    }
    return total;
}

double expect_pauli(const StateVector &s, const PauliString &p) {
    require_same_size(p.num_qubits(), s.num_qubits(), "expect_pauli");
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expect_pauli: " + p.str() + " is not Hermitian");
    }
    const PauliAction act = pauli_action(p);
    const auto amps = s.amplitudes();
    Complex total = 0.0;
    for (std::uint64_t c = 0; c < amps.size(); ++c) {
        const bool odd = std::popcount(act.zmask & c) & 1;
        total += std::conj(amps[c ^ act.xmask]) * (odd ? -act.base : act.base) * amps[c];
    }
    return total.real();
}

std::vector<DumpEntry> dump(const StateVector &s, double threshold) {
    std::vector<DumpEntry> out;
    const auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (std::abs(amps[k]) > threshold) {
            out.push_back({basis_label(k, s.num_qubits()), amps[k].real(), amps[k].imag()});
        }
    }
    return out;
}

}  // namespace anyonlab
