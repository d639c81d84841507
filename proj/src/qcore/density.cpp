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
#include "gentlegrad/qcore/density.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gentlegrad::qcore {

namespace {

using EMat = Eigen::MatrixXcd;
using EMap = Eigen::Map<EMat>;
using ECMap = Eigen::Map<const EMat>;

// Applies the gate list to every column of the matrix, treating each
// column as a statevector.
void apply_to_columns(DensityMatrix& rho, const GateList& gates, ControlSpec ctrl) {
    const std::size_t d = rho.dim();
    for (std::size_t c = 0; c < d; ++c) {
        cplx* col = rho.data() + c * d;
        for (const Gate& g : gates) raw::apply_gate(col, rho.n(), g, ctrl);
    }
}

} // namespace

DensityMatrix::DensityMatrix(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 12)
        throw std::invalid_argument("DensityMatrix: qubit count exceeds the dense cap of 12");
    dim_ = std::size_t(1) << n_qubits;
    m_.assign(dim_ * dim_, cplx(0.0, 0.0));
    m_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
    DensityMatrix rho(s.n());
    const std::size_t d = rho.dim_;
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r)
            rho.m_[c * d + r] = s.amp(r) * std::conj(s.amp(c));
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    DensityMatrix rho(n_qubits);
    const double p = 1.0 / static_cast<double>(rho.dim_);
    rho.m_.assign(rho.dim_ * rho.dim_, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < rho.dim_; ++i) rho.m_[i * rho.dim_ + i] = p;
    return rho;
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += m_[i * dim_ + i];
    return t;
}

void DensityMatrix::adjoint_in_place() {
    EMap map(m_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    map = map.adjoint().eval();
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (std::size_t c = 0; c < dim_; ++c)
        for (std::size_t r = 0; r <= c; ++r)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

bool DensityMatrix::is_valid_state(double tol, double tol_psd) const {
    if (!is_hermitian(tol)) return false;
    if (std::abs(trace() - cplx(1.0, 0.0)) > tol) return false;
    ECMap map(m_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    Eigen::SelfAdjointEigenSolver<EMat> es(map, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol_psd;
}

void evolve_density(DensityMatrix& rho, const GateList& gates, ControlSpec ctrl) {
    if (gates.empty()) return;
    // U rho U^dag: apply U to the columns of rho, then to the columns of the
    // adjoint, then undo the transpose. The hypothesis state is classical
    // memory, so this does not advance the quantum op counter.
    GateOpsPause pause;
    apply_to_columns(rho, gates, ctrl);
    rho.adjoint_in_place();
    apply_to_columns(rho, gates, ctrl);
    rho.adjoint_in_place();
}

void evolve_density(DensityMatrix& rho, const Gate& g, ControlSpec ctrl) {
    evolve_density(rho, GateList{g}, ctrl);
}

void evolve_density_pauli(DensityMatrix& rho, const PauliString& p, ControlSpec ctrl) {
    GateOpsPause pause;
    const std::size_t d = rho.dim();
    for (std::size_t c = 0; c < d; ++c) raw::apply_pauli(rho.data() + c * d, rho.n(), p, ctrl);
    rho.adjoint_in_place();
    for (std::size_t c = 0; c < d; ++c) raw::apply_pauli(rho.data() + c * d, rho.n(), p, ctrl);
    rho.adjoint_in_place();
}

double expectation(const DensityMatrix& rho, const PauliString& p) {
    if (rho.n() != p.n) throw std::invalid_argument("expectation: qubit count mismatch");
    // Tr(P rho) = sum_i P[i, i^x] rho[i^x, i], with P[i, j] = ph(j) at j = i^x.
    const auto [x, z] = index_masks(p);
    const cplx unit = pauli_phase_unit(p);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const std::size_t j = i ^ x;
        const cplx ph = (std::popcount(j & z) & 1) ? -unit : unit;
        acc += ph * rho.at(j, i);
    }
    return acc.real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("trace_distance: dimension mismatch");
    const auto d = static_cast<Eigen::Index>(a.dim());
    ECMap ma(a.data(), d, d);
    ECMap mb(b.data(), d, d);
    EMat diff = ma - mb;
    const double herm_err = (diff - diff.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-8)
        throw std::domain_error("trace_distance: difference is not Hermitian");
    diff = 0.5 * (diff + diff.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<EMat> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double purity(const DensityMatrix& rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    ECMap m(rho.data(), d, d);
    return (m * m).trace().real();
}

} // namespace gentlegrad::qcore
