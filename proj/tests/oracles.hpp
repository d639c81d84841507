// Copyright 2026 The gentlegrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Dense brute-force oracles for the test suites. Everything here builds
// explicit matrices with Eigen and never calls the bitmask fast paths it is
// used to check.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gentlegrad/qcore/gates.hpp"
#include "gentlegrad/qcore/pauli.hpp"
#include "gentlegrad/qcore/state.hpp"

namespace oracles {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using gentlegrad::qcore::Gate;
using gentlegrad::qcore::GateList;
using gentlegrad::qcore::PauliString;
using gentlegrad::qcore::StateVector;
using cplx = std::complex<double>;

inline Mat pauli_letter(char c) {
    Mat m(2, 2);
    switch (c) {
        case 'I': case '.': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli_letter");
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Dense matrix of a Pauli word; qubit 0 is the leftmost Kronecker factor.
inline Mat dense_pauli(const PauliString& p) {
    Mat m = Mat::Identity(1, 1);
    for (int q = 0; q < p.n; ++q) m = kron(m, pauli_letter(p.letter(q)));
    return double(p.sign) * m;
}

/// Embeds a single-qubit matrix at qubit q of n.
inline Mat embed_1q(const Mat& g, int q, int n) {
    Mat m = Mat::Identity(1, 1);
    for (int i = 0; i < n; ++i) m = kron(m, i == q ? g : Mat::Identity(2, 2));
    return m;
}

inline Mat dense_gate(const Gate& g, int n) {
    const double inv_sqrt2 = 0.70710678118654752440;
    Mat h(2, 2), s(2, 2), sdg(2, 2), p0(2, 2), p1(2, 2);
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    s << 1, 0, 0, cplx(0, 1);
    sdg << 1, 0, 0, cplx(0, -1);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    switch (g.kind) {
        case Gate::Kind::H: return embed_1q(h, g.q0, n);
        case Gate::Kind::S: return embed_1q(s, g.q0, n);
        case Gate::Kind::Sdg: return embed_1q(sdg, g.q0, n);
        case Gate::Kind::X: return embed_1q(pauli_letter('X'), g.q0, n);
        case Gate::Kind::Y: return embed_1q(pauli_letter('Y'), g.q0, n);
        case Gate::Kind::Z: return embed_1q(pauli_letter('Z'), g.q0, n);
        case Gate::Kind::Cnot:
            return embed_1q(p0, g.q0, n) + embed_1q(p1, g.q0, n) * embed_1q(pauli_letter('X'), g.q1, n);
        case Gate::Kind::Rot: {
            // Matrix exponential exp(-i angle P) via eigendecomposition.
            const Mat p = dense_pauli(g.word);
            Eigen::SelfAdjointEigenSolver<Mat> es(p);
            Vec phases(p.rows());
            for (Eigen::Index i = 0; i < p.rows(); ++i)
                phases(i) = std::exp(cplx(0, -g.angle * es.eigenvalues()(i)));
            return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
        }
    }
    throw std::logic_error("dense_gate");
}

inline Mat dense_gate_list(const GateList& gates, int n) {
    const Eigen::Index d = Eigen::Index(1) << n;
    Mat u = Mat::Identity(d, d);
    for (const Gate& g : gates) u = dense_gate(g, n) * u;
    return u;
}

/// Controlled-U on the full register: U acts when the control qubit has the
/// given value, identity otherwise (block construction).
inline Mat dense_controlled(const Mat& u_full, int control_qubit, int value, int n) {
    Mat p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    const Mat proj_active = embed_1q(value ? p1 : p0, control_qubit, n);
    const Eigen::Index d = Eigen::Index(1) << n;
    const Mat proj_idle = Mat::Identity(d, d) - proj_active;
    return proj_idle + u_full * proj_active;
}

inline Vec to_eigen(const StateVector& s) {
    Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.amp(i);
    return v;
}

inline double max_amp_diff(const StateVector& s, const Vec& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        m = std::max(m, std::abs(s.amp(i) - v(static_cast<Eigen::Index>(i))));
    return m;
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.amp(i) - b.amp(i)));
    return m;
}

} // namespace oracles
