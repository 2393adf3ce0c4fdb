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
#include <string>
#include <string_view>
#include <vector>

namespace anyonlab {

/// S is sqrt(Z) = e^{i pi/4} e^{-i pi/4 Z} = diag(1, i); Phase is diag(1, e^{i angle}).
enum class GateKind { X, Y, Z, H, S, Sdg, Phase, CX, CZ, Swap };

std::string_view gate_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool is_clifford(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<std::size_t, 2> targets{};  // 0-based; targets[1] unused for 1-qubit gates
    double angle = 0.0;                    // Phase only

    Gate inverse() const;
    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Ordered gate list over a fixed number of qubits. Targets are validated on
/// insertion.
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }

    Circuit &add(GateKind kind, std::size_t target);
    Circuit &add(GateKind kind, std::size_t first, std::size_t second);
    Circuit &add_phase(std::size_t target, double angle);
    Circuit &append(const Circuit &other);

    /// Reversed circuit with every gate inverted.
    Circuit inverse() const;

    /// One gate per line, 1-based targets: "H 1", "CZ 1 2", "PHASE 3 0.25".
    std::string str() const;

  private:
    void push(Gate g);

    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

}  // namespace anyonlab
