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

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "anyonlab/circuit.hpp"
#include "anyonlab/lattice.hpp"
#include "anyonlab/pauli_string.hpp"
#include "anyonlab/state_vector.hpp"

namespace anyonlab {

struct MeasureResult {
    int outcome;  // +1 or -1
    bool random;  // true when the outcome was drawn rather than determined
};

/// Stabilizer tableau with destabilizers (Aaronson-Gottesman layout).
///
/// Row i of stabilizers() and destabilizers() anticommute, every other pair
/// of rows commutes. Stabilizer rows carry a +-1 sign; global phase of the
/// represented state is not tracked.
class Tableau {
  public:
    /// |0...0>: stabilizers Z_i, destabilizers X_i.
    explicit Tableau(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliString> &stabilizers() const { return stabilizers_; }
    const std::vector<PauliString> &destabilizers() const { return destabilizers_; }

    /// Clifford gates only; PHASE with a generic angle throws.
    void apply(const Gate &gate);
    void apply(const Circuit &circuit);
    /// Conjugation by a Pauli: flips the sign of anticommuting stabilizers.
    void apply_pauli(const PauliString &p);

    /// Deterministic eigenvalue of a Hermitian Pauli, or nullopt when the
    /// outcome would be random. Does not modify the tableau.
    std::optional<int> peek(const PauliString &p) const;

    /// Projective measurement. Random outcomes are drawn from `rng`.
    MeasureResult measure(const PauliString &p, std::mt19937_64 &rng);

    /// Projects onto the `outcome` eigenspace of `p`. Throws if `p` is already
    /// determined with the opposite sign.
    void postselect(const PauliString &p, int outcome);

  private:
    void require_size(const PauliString &p, const char *what) const;
    std::optional<std::size_t> first_anticommuting_stabilizer(const PauliString &p,
                                                              const std::vector<std::size_t> &support) const;
    void project(const PauliString &p, std::size_t pivot, int outcome);

    std::size_t num_qubits_;
    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
};

/// Ground state of a torus(k) model: all A_v and B_f at +1, completed by
/// the Z loops on the row-0 horizontal edges and on the column-0 vertical
/// edges, with eigenvalues (-1)^logical[0] and (-1)^logical[1].
Tableau init_toric_ground(const LatticeModel &m, std::array<bool, 2> logical = {false, false});

/// Logical Z loops used by init_toric_ground (row 0, column 0).
std::array<PauliString, 2> toric_logical_z(const LatticeModel &m);
/// X loops on the dual lattice; entry j anticommutes only with logical Z j.
std::array<PauliString, 2> toric_logical_x(const LatticeModel &m);

/// Deterministic eigenvalue of every model generator, vertex ops first.
/// A generator whose outcome is not determined is reported with value 0.
std::vector<SyndromeEntry> syndrome_sweep(const Tableau &t, const LatticeModel &m);

/// Dense state stabilized by the tableau, up to global phase. Limited to
/// `dense_limit` qubits.
StateVector to_state_vector(const Tableau &t, std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace anyonlab
