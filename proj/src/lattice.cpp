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

#include "anyonlab/lattice.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace anyonlab {

std::size_t toric_h(std::size_t k, std::size_t r, std::size_t c) { return 2 * ((r % k) * k + (c % k)); }

std::size_t toric_v(std::size_t k, std::size_t r, std::size_t c) { return 2 * ((r % k) * k + (c % k)) + 1; }

std::vector<Generator> LatticeModel::generators() const {
    std::vector<Generator> out = vertex_ops;
    out.insert(out.end(), face_ops.begin(), face_ops.end());
    return out;
}

std::string LatticeModel::name() const {
    return geometry == Geometry::planar6 ? "planar6" : "torus:" + std::to_string(k);
}

LatticeModel build_toric(std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("torus side k must be at least 2, got " + std::to_string(k));
    }
    LatticeModel m;
    m.geometry = Geometry::torus;
    m.k = k;
    m.num_qubits = 2 * k * k;
    m.qubit_layout.resize(m.num_qubits);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::string cell = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
            m.qubit_layout[toric_h(k, r, c)] = "h" + cell;
            m.qubit_layout[toric_v(k, r, c)] = "v" + cell;
        }
    }
    // Wrapping r-1 and c-1 via +k keeps the arithmetic unsigned.
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::array<std::size_t, 4> star{toric_h(k, r, c), toric_h(k, r, c + k - 1), toric_v(k, r, c),
                                                  toric_v(k, r + k - 1, c)};
            m.vertex_ops.push_back({"A" + std::to_string(m.vertex_ops.size() + 1),
                                    PauliString::uniform(m.num_qubits, star, 'X')});
        }
    }
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::array<std::size_t, 4> plaquette{toric_h(k, r, c), toric_h(k, r + 1, c), toric_v(k, r, c),
                                                       toric_v(k, r, c + 1)};
            m.face_ops.push_back({"B" + std::to_string(m.face_ops.size() + 1),
                                  PauliString::uniform(m.num_qubits, plaquette, 'Z')});
        }
    }
    return m;
}

LatticeModel build_planar6() {
    LatticeModel m;
    m.geometry = Geometry::planar6;
    m.num_qubits = 6;
    m.qubit_layout = {"C1", "M", "C2", "C4", "H2", "C3"};
    auto op = [](std::string_view text) { return PauliString::parse(text, 6); };
    m.vertex_ops = {{"A1", op("X1 X2 X3")}, {"A2", op("X3 X4 X5 X6")}};
    m.face_ops = {{"B1", op("Z1 Z3 Z4")}, {"B2", op("Z2 Z3 Z5")}, {"B3", op("Z4 Z6")}, {"B4", op("Z5 Z6")}};
    return m;
}

LatticeModel parse_model(std::string_view spec) {
    if (spec == "planar6") {
        return build_planar6();
    }
    constexpr std::string_view prefix = "torus:";
    if (spec.starts_with(prefix)) {
        std::size_t k = 0;
        const auto digits = spec.substr(prefix.size());
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
            return build_toric(k);
        }
    }
    throw std::invalid_argument("unknown model \"" + std::string(spec) + "\"; expected planar6 or torus:<k>");
}

void GraphSpec::validate() const {
    if (local_map.size() != num_vertices) {
        throw std::invalid_argument("graph spec: local map has " + std::to_string(local_map.size()) +
                                    " entries for " + std::to_string(num_vertices) + " vertices");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
        if (a >= num_vertices || b >= num_vertices) {
            throw std::out_of_range("graph spec: edge (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                    ") references a missing vertex");
        }
        if (a == b) {
            throw std::invalid_argument("graph spec: self-loop on vertex " + std::to_string(a + 1));
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            throw std::invalid_argument("graph spec: duplicate edge (" + std::to_string(a + 1) + "," +
                                        std::to_string(b + 1) + ")");
        }
    }
}

GraphSpec planar6_graph() {
    GraphSpec g;
    g.num_vertices = 6;
    g.edges = {{0, 1}, {0, 2}, {2, 5}, {3, 5}, {4, 5}};
    g.local_map = {LocalGate::I, LocalGate::H, LocalGate::H, LocalGate::H, LocalGate::H, LocalGate::I};
    return g;
}

Circuit graph_state_circuit(const GraphSpec &spec) {
    spec.validate();
    Circuit c(spec.num_vertices);
    for (std::size_t v = 0; v < spec.num_vertices; ++v) {
        c.add(GateKind::H, v);
    }
    for (auto [a, b] : spec.edges) {
        c.add(GateKind::CZ, a, b);
    }
    return c;
}

Circuit ground_state_circuit(const GraphSpec &spec) {
    Circuit c = graph_state_circuit(spec);
    for (std::size_t v = 0; v < spec.num_vertices; ++v) {
        if (spec.local_map[v] == LocalGate::H) {
            c.add(GateKind::H, v);
        }
    }
    return c;
}

std::vector<SyndromeEntry> syndrome(const LatticeModel &m, const StateVector &s) {
    if (s.num_qubits() != m.num_qubits) {
        throw std::invalid_argument("syndrome: model has " + std::to_string(m.num_qubits) + " qubits, state has " +
                                    std::to_string(s.num_qubits()));
    }
    std::vector<SyndromeEntry> out;
    for (const auto &g : m.generators()) {
        const double value = expect_pauli(s, g.op);
        out.push_back({g.id, value, std::abs(std::abs(value) - 1.0) <= 1e-9});
    }
    return out;
}

double hamiltonian_energy(const LatticeModel &m, const StateVector &s) {
    double energy = 0.0;
    for (const auto &entry : syndrome(m, s)) {
        energy -= entry.value;
    }
    return energy;
}

std::vector<SyndromeEntry> pauli_syndrome(const LatticeModel &m, const PauliString &error) {
    if (error.num_qubits() != m.num_qubits) {
        throw std::invalid_argument("pauli_syndrome: qubit count mismatch");
    }
    std::vector<SyndromeEntry> out;
    for (const auto &g : m.generators()) {
        out.push_back({g.id, commutes(g.op, error) ? 1.0 : -1.0, true});
    }
    return out;
}

DefectCount count_defects(const std::vector<SyndromeEntry> &syndromes) {
    DefectCount d;
    for (const auto &e : syndromes) {
        if (e.value > -0.5) {
            continue;
        }
        if (e.id.starts_with("A")) {
            ++d.vertex;
        } else {
            ++d.face;
        }
    }
    return d;
}

}  // namespace anyonlab
