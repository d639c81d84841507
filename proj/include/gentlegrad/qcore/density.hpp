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

#include <vector>

#include "gentlegrad/qcore/gates.hpp"
#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::qcore {

/// Dense n-qubit density matrix, column-major, capped at 12 qubits (the
/// hypothesis-state representation is deliberately explicit and exponential).
class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(int n_qubits);

    static DensityMatrix from_state(const StateVector& s);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n() const { return n_; }
    std::size_t dim() const { return dim_; }
    cplx* data() { return m_.data(); }
    const cplx* data() const { return m_.data(); }
    cplx at(std::size_t row, std::size_t col) const { return m_[col * dim_ + row]; }
    cplx& at(std::size_t row, std::size_t col) { return m_[col * dim_ + row]; }

    cplx trace() const;
    void adjoint_in_place();

    bool is_hermitian(double tol = 1e-10) const;
    /// Hermitian, unit trace, eigenvalues >= -tol_psd.
    bool is_valid_state(double tol = 1e-10, double tol_psd = 1e-8) const;

  private:
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<cplx> m_;
};

/// rho -> U rho U^dag for the unitary given as a gate list (optionally with
/// an extra control condition, matching the statevector appliers). Gate
/// operations are counted once per gate, not per matrix column.
void evolve_density(DensityMatrix& rho, const GateList& gates, ControlSpec ctrl = {});
void evolve_density(DensityMatrix& rho, const Gate& g, ControlSpec ctrl = {});
void evolve_density_pauli(DensityMatrix& rho, const PauliString& p, ControlSpec ctrl = {});

/// Tr(P rho), real part (P Hermitian).
double expectation(const DensityMatrix& rho, const PauliString& p);

/// (1/2) || a - b ||_1 via the eigenvalues of the Hermitian difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Fidelity-free purity helper used in tests.
double purity(const DensityMatrix& rho);

} // namespace gentlegrad::qcore
