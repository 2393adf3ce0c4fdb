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

#include "anyonlab/pauli_string.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace anyonlab {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void require_same_size(const PauliString &a, const PauliString &b, const char *what) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                    std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) + ")");
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char pauli) {
    PauliString p(num_qubits);
    p.set(qubit, pauli);
    return p;
}

PauliString PauliString::uniform(std::size_t num_qubits, std::span<const std::size_t> qubits, char pauli) {
    PauliString p(num_qubits);
    for (std::size_t q : qubits) {
        p.set(q, pauli);
    }
    return p;
}

bool PauliString::x(std::size_t qubit) const { return (xs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u; }

bool PauliString::z(std::size_t qubit) const { return (zs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u; }

char PauliString::pauli(std::size_t qubit) const {
    static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
    return kNames[(x(qubit) ? 1 : 0) | (z(qubit) ? 2 : 0)];
}

void PauliString::set(std::size_t qubit, char pauli) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits_) + "-qubit Pauli string");
    }
    bool bx = false;
    bool bz = false;
    switch (std::toupper(static_cast<unsigned char>(pauli))) {
        case 'I': break;
        case 'X': bx = true; break;
        case 'Z': bz = true; break;
        case 'Y': bx = bz = true; break;
        default: throw std::invalid_argument(std::string("unknown Pauli '") + pauli + "'");
    }
    set_xz(qubit, bx, bz);
}

void PauliString::set_xz(std::size_t qubit, bool bx, bool bz) {
    const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
    auto &wx = xs_[qubit / kWordBits];
    auto &wz = zs_[qubit / kWordBits];
    wx = bx ? (wx | bit) : (wx & ~bit);
    wz = bz ? (wz | bit) : (wz & ~bit);
}

Complex PauliString::phase() const {
    static constexpr Complex kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kUnits[phase_];
}

bool PauliString::is_identity_up_to_phase() const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(xs_[w] | zs_[w]));
    }
    return total;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        std::uint64_t bits = xs_[w] | zs_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    require_same_size(*this, rhs, "multiply");
    // Per qubit, (a, b) in {(X,Y), (Y,Z), (Z,X)} contributes +i and the
    // reversed orders contribute -i.
    long long delta = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        const std::uint64_t ax = xs_[w], az = zs_[w];
        const std::uint64_t bx = rhs.xs_[w], bz = rhs.zs_[w];
        const std::uint64_t a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
        const std::uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
        const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        const std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        delta += std::popcount(plus);
        delta -= std::popcount(minus);
        xs_[w] = ax ^ bx;
        zs_[w] = az ^ bz;
    }
    const long long total = static_cast<long long>(phase_) + rhs.phase_ + delta;
    phase_ = static_cast<unsigned>(((total % 4) + 4) % 4);
    return *this;
}

PauliString PauliString::operator-() const {
    PauliString out = *this;
    out.multiply_phase(2);
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kSigns[4] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[phase_];
    bool first = true;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        const char p = pauli(q);
        if (p == 'I') {
            continue;
        }
        if (!first) {
            out += ' ';
        } else if (phase_ & 1u) {
            out += ' ';
        }
        first = false;
        out += p;
        out += std::to_string(q + 1);
    }
    if (first) {
        out += (phase_ & 1u) ? " I" : "I";
    }
    return out;
}

PauliString PauliString::parse(std::string_view text, std::size_t num_qubits) {
    PauliString out(num_qubits);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_space();
    unsigned phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
        if (pos < text.size() && text[pos] == 'i') {
            phase += 1;
            ++pos;
        }
    }
    std::vector<bool> seen(num_qubits, false);
    bool any_term = false;
    while (true) {
        skip_space();
        if (pos >= text.size()) {
            break;
        }
        const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (kind != 'I' && kind != 'X' && kind != 'Y' && kind != 'Z') {
            throw std::invalid_argument("bad Pauli term at offset " + std::to_string(pos) + " in \"" +
                                        std::string(text) + "\"");
        }
        ++pos;
        if (kind == 'I' && (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))) {
            any_term = true;
            continue;
        }
        std::size_t index = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
        if (ec != std::errc() || end == text.data() + pos) {
            throw std::invalid_argument("missing qubit index after '" + std::string(1, kind) + "' in \"" +
                                        std::string(text) + "\"");
        }
        pos = static_cast<std::size_t>(end - text.data());
        if (index < 1 || index > num_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(index) + " outside 1.." +
                                    std::to_string(num_qubits));
        }
        if (seen[index - 1]) {
            throw std::invalid_argument("qubit " + std::to_string(index) + " listed twice in \"" +
                                        std::string(text) + "\"");
        }
        seen[index - 1] = true;
        out.set(index - 1, kind);
        any_term = true;
    }
    if (!any_term) {
        throw std::invalid_argument("empty Pauli string \"" + std::string(text) + "\"");
    }
    out.phase_ = phase;
    return out;
}

PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_size(a, b, "commutes");
    const auto ax = a.x_words(), az = a.z_words();
    const auto bx = b.x_words(), bz = b.z_words();
    int parity = 0;
    for (std::size_t w = 0; w < ax.size(); ++w) {
        parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
    }
    return parity == 0;
}

ComplexMatrix to_dense(const PauliString &p, std::size_t dense_limit) {
    const std::size_t n = p.num_qubits();
    if (n > dense_limit) {
        throw std::length_error("to_dense: " + std::to_string(n) + " qubits exceeds dense limit " +
                                std::to_string(dense_limit));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::uint64_t xmask = 0, zmask = 0;
    unsigned y_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        if (p.x(q)) xmask |= bit;
        if (p.z(q)) zmask |= bit;
        if (p.x(q) && p.z(q)) ++y_count;
    }
    // Y|b> = i(-1)^b |1-b>, so every Y adds a factor i on top of the Z sign.
    PauliString y_phase(0);
    y_phase.multiply_phase(y_count);
    const Complex base = p.phase() * y_phase.phase();
    ComplexMatrix m{dim, std::vector<Complex>(dim * dim)};
    for (std::size_t col = 0; col < dim; ++col) {
        const bool odd = std::popcount(zmask & col) & 1;
        m(col ^ xmask, col) = odd ? -base : base;
    }
    return m;
}

}  // namespace anyonlab
