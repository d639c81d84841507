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
#include "gentlegrad/qcore/pauli.hpp"
#include "gentlegrad/qcore/rng.hpp"

namespace gentlegrad::shadows {

using qcore::Gate;
using qcore::GateList;
using qcore::PauliString;
using qcore::RngStream;

/// Stabilizer tableau: rows 0..n-1 are the conjugation images of X_q, rows
/// n..2n-1 the images of Z_q.
struct CliffordTableau {
    int n = 0;
    std::vector<PauliString> rows;

    const PauliString& x_image(int q) const { return rows[q]; }
    const PauliString& z_image(int q) const { return rows[n + q]; }

    /// Rows must satisfy the symplectic relations: X_q/Z_q images
    /// anticommute pairwise and commute across qubits.
    bool is_symplectic() const;
};

/// In-place conjugation P <- g P g^dag for Clifford gates (H, S, Sdg, X, Y,
/// Z, CNOT), with sign tracking.
void conjugate_pauli(PauliString& p, const Gate& g);
void conjugate_pauli(PauliString& p, const GateList& gates);

/// Tableau of the unitary implemented by the gate list.
CliffordTableau tableau_of(const GateList& gates, int n);

struct SampledClifford {
    CliffordTableau tableau;
    GateList gates; // equivalent circuit over {H, S, Sdg, X, Y, Z, CNOT}
};

/// Uniformly random n-qubit Clifford (modulo global phase) via the
/// anticommuting-pair reduction: for each qubit, the images of (X_j, Z_j)
/// are drawn uniformly and swept to canonical form, which makes the
/// choice-to-element map a bijection.
SampledClifford sample_random_clifford(int n, RngStream& rng);

} // namespace gentlegrad::shadows
