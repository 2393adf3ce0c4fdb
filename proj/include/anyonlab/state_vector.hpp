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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anyonlab/circuit.hpp"
#include "anyonlab/pauli_string.hpp"

namespace anyonlab {

/// Dense pure state over n qubits.
///
/// Ordering: qubit 0 (written as qubit 1 in kets and text) is the most
/// significant bit of the basis index, so the ket label "110111" reads
/// qubits 1..n from left to right. Global phases are kept exactly; nothing in
/// this class renormalizes or rephases amplitudes.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits, std::size_t dense_limit = kDefaultDenseLimit);

    /// Computational basis state from a ket label such as "000100".
    static StateVector basis(std::string_view label, std::size_t dense_limit = kDefaultDenseLimit);
    /// Takes ownership of 2^n amplitudes; throws if the size is not a power of two
    /// or the vector is not normalized to within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amps, std::size_t dense_limit = kDefaultDenseLimit);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }
    Complex amplitude(std::string_view label) const;

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);
    void apply_pauli(const PauliString &p);
    /// exp(-i theta P) for a Hermitian Pauli string P.
    void apply_pauli_rotation(const PauliString &p, double theta);
    void scale(Complex factor);

    double norm_squared() const;

  private:
    StateVector(std::size_t num_qubits, std::vector<Complex> amps);

    std::uint64_t bit_of(std::size_t qubit) const { return std::uint64_t{1} << (num_qubits_ - 1 - qubit); }
    void require_qubit(std::size_t qubit) const;
    void apply_1q(std::size_t qubit, Complex m00, Complex m01, Complex m10, Complex m11);

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// Ket label for a basis index, qubit 1 first.
std::string basis_label(std::uint64_t index, std::size_t num_qubits);
std::uint64_t basis_index(std::string_view label);

/// Functional wrappers; the input state is taken by value.
StateVector apply_gate(StateVector s, const Gate &gate);
StateVector apply_pauli(StateVector s, const PauliString &p);
StateVector run(const Circuit &circuit, StateVector s0);

/// <a|b>.
Complex overlap(const StateVector &a, const StateVector &b);

/// <s|P|s> for Hermitian P.
double expect_pauli(const StateVector &s, const PauliString &p);

struct DumpEntry {
    std::string label;
    double re;
    double im;
};

/// Amplitudes whose modulus exceeds `threshold`, in basis order.
std::vector<DumpEntry> dump(const StateVector &s, double threshold = 1e-9);

}  // namespace anyonlab
