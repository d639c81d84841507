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
#include "gentlegrad/tomography/learner.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gentlegrad::tomography {

namespace {

using EMat = Eigen::MatrixXcd;

// accumulator += dir * E for a Pauli word E: E[i^x, i] = ph(i).
void add_pauli(DensityMatrix& acc, const PauliString& e, double dir) {
    const auto [x, z] = qcore::index_masks(e);
    const auto unit = qcore::pauli_phase_unit(e);
    for (std::size_t i = 0; i < acc.dim(); ++i) {
        const auto ph = (std::popcount(i & z) & 1) ? -unit : unit;
        acc.at(i ^ x, i) += dir * ph;
    }
}

} // namespace

OnlineLearner::OnlineLearner(int n_qubits, double eta)
    : n_(n_qubits), eta_(eta), omega_(DensityMatrix::maximally_mixed(n_qubits)),
      accumulator_(n_qubits) {
    if (eta <= 0.0) throw std::invalid_argument("OnlineLearner: eta must be positive");
    accumulator_.at(0, 0) = 0.0; // zero matrix
}

double OnlineLearner::predict(const PauliString& e) const {
    return qcore::expectation(omega_, e);
}

void OnlineLearner::update(const PauliString& e, double b) {
    if (e.n != n_) throw std::invalid_argument("OnlineLearner: observable width mismatch");
    if (std::abs(b) > 1.0 + 1e-9)
        throw std::invalid_argument("OnlineLearner: |b| must be at most 1");
    const double err = predict(e) - b;
    const double dir = (err > 0.0) - (err < 0.0);
    if (dir != 0.0) {
        add_pauli(accumulator_, e, dir);
        refresh_omega();
    }
    ++mistakes_;
}

void OnlineLearner::rotate(const std::vector<ControlledGates>& ops) {
    for (const auto& op : ops) {
        qcore::evolve_density(omega_, op.gates, op.ctrl);
        qcore::evolve_density(accumulator_, op.gates, op.ctrl);
    }
}

void OnlineLearner::set_omega(const DensityMatrix& omega) {
    if (omega.n() != n_) throw std::invalid_argument("OnlineLearner: state width mismatch");
    omega_ = omega;
    accumulator_ = DensityMatrix(n_);
    accumulator_.at(0, 0) = 0.0;
    omega_overridden_ = true;
}

void OnlineLearner::refresh_omega() {
    const auto d = static_cast<Eigen::Index>(accumulator_.dim());
    Eigen::Map<const EMat> acc(accumulator_.data(), d, d);
    Eigen::SelfAdjointEigenSolver<EMat> es(acc);
    // omega = exp(-eta A) / Tr[exp(-eta A)], shifted for stability.
    const Eigen::VectorXd lambda = es.eigenvalues();
    const double shift = (-eta_ * lambda.array()).maxCoeff();
    Eigen::VectorXd w = (-eta_ * lambda.array() - shift).exp();
    w /= w.sum();
    EMat om = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
    for (std::size_t c = 0; c < accumulator_.dim(); ++c)
        for (std::size_t r = 0; r < accumulator_.dim(); ++r)
            omega_.at(r, c) = om(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    omega_overridden_ = false;
}

} // namespace gentlegrad::tomography
