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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anyonlab {

using Complex = std::complex<double>;

/// Maximum qubit count for which dense (2^n sized) objects are built unless
/// the caller passes a different limit.
inline constexpr std::size_t kDefaultDenseLimit = 12;

/// Row-major square complex matrix. Only used for small dense checks.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    Complex &operator()(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data[row * dim + col]; }
};

/// A signed n-qubit Pauli operator  i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each qubit carries an (x, z) bit pair: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y,
/// where the (1,1) pair denotes the Hermitian Y itself, not the product XZ.
/// Under this encoding single-qubit products follow the usual algebra
///     XY = iZ,  YZ = iX,  ZX = iY,   and in particular  XZ = -iY.
/// The scalar prefix is stored as the exponent k of i (mod 4), so a string is
/// Hermitian exactly when k is even.
///
/// Qubits are indexed from 0 in code. The text form ("+X1 Z3 Z4") uses
/// 1-based indices.
class PauliString {
  public:
    explicit PauliString(std::size_t num_qubits);

    /// Single-qubit Pauli ('I', 'X', 'Y' or 'Z') on `qubit`.
    static PauliString single(std::size_t num_qubits, std::size_t qubit, char pauli);
    /// Tensor product of `pauli` over all listed qubits.
    static PauliString uniform(std::size_t num_qubits, std::span<const std::size_t> qubits, char pauli);
    /// Parses "+X1 Z3 Z4", "-i Y2", "+I". Leading sign is one of "+", "-",
    /// "+i", "-i" and may be omitted (meaning "+").
    static PauliString parse(std::string_view text, std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_words() const { return xs_.size(); }

    bool x(std::size_t qubit) const;
    bool z(std::size_t qubit) const;
    char pauli(std::size_t qubit) const;
    void set(std::size_t qubit, char pauli);
    void set_xz(std::size_t qubit, bool x, bool z);

    /// Exponent k of the i^k prefactor, in [0, 4).
    unsigned phase_exponent() const { return phase_; }
    Complex phase() const;
    void multiply_phase(unsigned exponent) { phase_ = (phase_ + exponent) & 3u; }
    bool is_hermitian() const { return (phase_ & 1u) == 0; }
    /// True when every qubit carries the identity (the prefactor is ignored).
    bool is_identity_up_to_phase() const;

    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    std::span<const std::uint64_t> x_words() const { return xs_; }
    std::span<const std::uint64_t> z_words() const { return zs_; }

    /// Right multiplication: *this = (*this) * rhs.
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator-() const;

    std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t num_qubits_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    unsigned phase_ = 0;
};

PauliString operator*(PauliString lhs, const PauliString &rhs);

/// True when the two strings commute (even symplectic inner product).
bool commutes(const PauliString &a, const PauliString &b);

/// Kronecker expansion of `p` including its scalar prefix. Basis index bit
/// (n-1-q) holds qubit q, so qubit 0 is the most significant bit.
ComplexMatrix to_dense(const PauliString &p, std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace anyonlab
