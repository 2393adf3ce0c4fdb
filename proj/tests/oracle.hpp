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

// Independent reference implementations for tests. Nothing here calls into
// the library's dense or symplectic code paths.

#pragma once

#include <Eigen/Dense>
#include <bitset>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "anyonlab/state_vector.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli_2x2(char p) {
    Mat m(2, 2);
    switch (p) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m << 1, 0, 0, 1; break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Kronecker product with letters[0] on the most significant factor.
inline Mat pauli_matrix(const std::string &letters, C prefactor = 1.0) {
    Mat m = Mat::Identity(1, 1);
    for (char c : letters) {
        m = kron(m, pauli_2x2(c));
    }
    return prefactor * m;
}

/// U on qubit q of n (qubit 0 most significant).
inline Mat embed_1q(const Mat &u, std::size_t q, std::size_t n) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t k = 0; k < n; ++k) {
        m = kron(m, k == q ? u : Mat(Mat::Identity(2, 2)));
    }
    return m;
}

inline Mat gate_2x2(const std::string &name, double angle = 0.0) {
    const double s = 1.0 / std::sqrt(2.0);
    Mat m(2, 2);
    if (name == "H") m << s, s, s, -s;
    else if (name == "S") m << 1, 0, 0, C(0, 1);
    else if (name == "S_DAG") m << 1, 0, 0, C(0, -1);
    else if (name == "PHASE") m << 1, 0, 0, std::polar(1.0, angle);
    else m = pauli_2x2(name[0]);
    return m;
}

/// Two-qubit gates built from projectors: |0><0| (x) I + |1><1| (x) U.
inline Mat controlled(const Mat &u, std::size_t control, std::size_t target, std::size_t n) {
    Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    Mat a = Mat::Identity(1, 1), b = Mat::Identity(1, 1);
    for (std::size_t k = 0; k < n; ++k) {
        const Mat id = Mat::Identity(2, 2);
        a = kron(a, k == control ? p0 : id);
        b = kron(b, k == control ? p1 : (k == target ? u : id));
    }
    return a + b;
}

inline Mat swap_gate(std::size_t a, std::size_t b, std::size_t n) {
    return controlled(pauli_2x2('X'), a, b, n) * controlled(pauli_2x2('X'), b, a, n) *
           controlled(pauli_2x2('X'), a, b, n);
}

inline Vec to_eigen(const anyonlab::StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t k = 0; k < s.dim(); ++k) {
        v(static_cast<Eigen::Index>(k)) = s.amplitude(k);
    }
    return v;
}

inline Vec random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Vec v(Eigen::Index{1} << n);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v(k) = C(g(rng), g(rng));
    }
    return v.normalized();
}

/// Normalized image of a random vector under prod (I + g_i)/2.
inline Vec projected_state(const std::vector<Mat> &stabilizers, std::size_t n, std::uint64_t seed) {
    Vec v = random_state(n, seed);
    const Mat id = Mat::Identity(v.size(), v.size());
    for (const auto &g : stabilizers) {
        v = 0.5 * (id + g) * v;
    }
    return v.normalized();
}

/// Rank over GF(2) of rows given as bit vectors.
template <std::size_t N>
std::size_t gf2_rank(std::vector<std::bitset<N>> rows) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][col]) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
