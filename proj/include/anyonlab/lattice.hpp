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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anyonlab/circuit.hpp"
#include "anyonlab/pauli_string.hpp"
#include "anyonlab/state_vector.hpp"

namespace anyonlab {

enum class Geometry { torus, planar6 };

struct Generator {
    std::string id;  // "A1", "B3", ...
    PauliString op;
};

/// A Kitaev-type stabilizer Hamiltonian H = -sum A_v - sum B_f.
///
/// Toric layout for torus(k): vertex (r, c) with r, c in [0, k). Cell (r, c)
/// owns the horizontal edge h(r,c) = (r,c)-(r,c+1) and the vertical edge
/// v(r,c) = (r,c)-(r+1,c), indices wrapping mod k. Qubits are numbered
/// row-major by cell with the horizontal edge first:
///     h(r,c) -> 2(rk + c),   v(r,c) -> 2(rk + c) + 1.
/// A_v for vertex (r,c) acts on h(r,c), h(r,c-1), v(r,c), v(r-1,c).
/// B_f for the face with top-left vertex (r,c) acts on h(r,c), h(r+1,c),
/// v(r,c), v(r,c+1). Both lists are in row-major scan order, ids 1-based.
struct LatticeModel {
    Geometry geometry = Geometry::planar6;
    std::size_t k = 0;  // torus side; 0 for planar6
    std::size_t num_qubits = 0;
    std::vector<Generator> vertex_ops;
    std::vector<Generator> face_ops;
    std::vector<std::string> qubit_layout;  // per qubit: "h(0,1)", "v(2,0)", or the spin name for planar6

    /// Vertex ops followed by face ops.
    std::vector<Generator> generators() const;
    std::string name() const;
};

LatticeModel build_toric(std::size_t k);
/// The six-qubit planar model: A1 = X1X2X3, A2 = X3X4X5X6, B1 = Z1Z3Z4,
/// B2 = Z2Z3Z5, B3 = Z4Z6, B4 = Z5Z6.
LatticeModel build_planar6();
/// "planar6" or "torus:<k>".
LatticeModel parse_model(std::string_view spec);

std::size_t toric_h(std::size_t k, std::size_t r, std::size_t c);
std::size_t toric_v(std::size_t k, std::size_t r, std::size_t c);

enum class LocalGate { I, H };

/// Graph state recipe: |G> = prod_{(i,j) in E} CZ_ij |+>^V, followed by a
/// per-vertex local gate. Vertices are 0-based.
struct GraphSpec {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<LocalGate> local_map;

    void validate() const;
};

/// Edges {(1,2),(1,3),(3,6),(4,6),(5,6)} with local map I H H H H I.
GraphSpec planar6_graph();

/// H on every vertex, then CZ per edge. Produces |G> from |0...0>.
Circuit graph_state_circuit(const GraphSpec &spec);
/// graph_state_circuit followed by the local-map layer.
Circuit ground_state_circuit(const GraphSpec &spec);

double hamiltonian_energy(const LatticeModel &m, const StateVector &s);

struct SyndromeEntry {
    std::string id;
    double value;      // expectation; exactly +-1 for eigenstates
    bool eigenstate;   // |value| within 1e-9 of 1
};

std::vector<SyndromeEntry> syndrome(const LatticeModel &m, const StateVector &s);

/// Syndrome of a Pauli error applied to the ground space: -1 exactly on the
/// generators the error anticommutes with.
std::vector<SyndromeEntry> pauli_syndrome(const LatticeModel &m, const PauliString &error);

struct DefectCount {
    std::size_t vertex = 0;
    std::size_t face = 0;
};

/// Counts -1 outcomes on vertex ("A...") and face ("B...") generators.
DefectCount count_defects(const std::vector<SyndromeEntry> &syndromes);

}  // namespace anyonlab
