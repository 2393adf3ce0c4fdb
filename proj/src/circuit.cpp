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

#include "anyonlab/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace anyonlab {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
    bool clifford;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::X, "X", 1, true},     {GateKind::Y, "Y", 1, true},          {GateKind::Z, "Z", 1, true},
    {GateKind::H, "H", 1, true},     {GateKind::S, "S", 1, true},          {GateKind::Sdg, "S_DAG", 1, true},
    {GateKind::Phase, "PHASE", 1, false}, {GateKind::CX, "CX", 2, true},   {GateKind::CZ, "CZ", 2, true},
    {GateKind::Swap, "SWAP", 2, true},
};

const GateInfo &info(GateKind kind) {
    for (const auto &g : kGateTable) {
        if (g.kind == kind) {
            return g;
        }
    }
    throw std::logic_error("unregistered gate kind");
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::size_t gate_arity(GateKind kind) { return info(kind).arity; }

bool is_clifford(GateKind kind) { return info(kind).clifford; }

GateKind parse_gate_kind(std::string_view name) {
    for (const auto &g : kGateTable) {
        if (g.name == name) {
            return g.kind;
        }
    }
    if (name == "SDG" || name == "S_DAGGER") {
        return GateKind::Sdg;
    }
    if (name == "CNOT") {
        return GateKind::CX;
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::S: g.kind = GateKind::Sdg; break;
        case GateKind::Sdg: g.kind = GateKind::S; break;
        case GateKind::Phase: g.angle = -angle; break;
        default: break;
    }
    return g;
}

void Circuit::push(Gate g) {
    const std::size_t arity = gate_arity(g.kind);
    for (std::size_t i = 0; i < arity; ++i) {
        if (g.targets[i] >= num_qubits_) {
            throw std::out_of_range(std::string(gate_name(g.kind)) + ": target " + std::to_string(g.targets[i] + 1) +
                                    " outside 1.." + std::to_string(num_qubits_));
        }
    }
    if (arity == 2 && g.targets[0] == g.targets[1]) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": targets must be distinct");
    }
    gates_.push_back(g);
}

Circuit &Circuit::add(GateKind kind, std::size_t target) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " needs two targets");
    }
    if (kind == GateKind::Phase) {
        throw std::invalid_argument("PHASE needs an angle; use add_phase");
    }
    push(Gate{kind, {target, 0}, 0.0});
    return *this;
}

Circuit &Circuit::add(GateKind kind, std::size_t first, std::size_t second) {
    if (gate_arity(kind) != 2) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes one target");
    }
    push(Gate{kind, {first, second}, 0.0});
    return *this;
}

Circuit &Circuit::add_phase(std::size_t target, double angle) {
    push(Gate{GateKind::Phase, {target, 0}, angle});
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("append: qubit count mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    out.gates_.reserve(gates_.size());
    std::for_each(gates_.rbegin(), gates_.rend(), [&](const Gate &g) { out.gates_.push_back(g.inverse()); });
    return out;
}

std::string Circuit::str() const {
    std::string out;
    for (const auto &g : gates_) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.targets[0] + 1);
        if (gate_arity(g.kind) == 2) {
            out += ' ';
            out += std::to_string(g.targets[1] + 1);
        }
        if (g.kind == GateKind::Phase) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " %.12g", g.angle);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace anyonlab
