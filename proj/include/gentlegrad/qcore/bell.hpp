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

#include <array>
#include <vector>

#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::qcore {

/// Per-qubit Bell outcome indices: 0 = Phi+, 1 = Psi+, 2 = Phi-, 3 = Psi-.
using BellOutcome = std::vector<int>;

/// Eigenvalue of P (x) P on the Bell basis state with the given index, for
/// single-qubit letters ordered I, X, Y, Z. Verified against a dense
/// projector oracle in the tests.
inline constexpr std::array<std::array<int, 4>, 4> kBellPauliEigen = {{
    // Phi+  Psi+  Phi-  Psi-
    {+1, +1, +1, +1}, // I
    {+1, +1, -1, -1}, // X
    {-1, +1, +1, -1}, // Y
    {+1, -1, +1, -1}, // Z
}};

int bell_pauli_eigenvalue(char letter, int bell_index);

/// Transversal per-qubit Bell-basis measurement of a (x) b: basis change
/// (CNOT + H on each qubit pair) followed by a computational Born sample.
BellOutcome bell_sample_pair(const StateVector& a, const StateVector& b, RngStream& rng);

/// Repeated-sampling form: precomputes the rotated joint distribution once
/// so large sample counts stay cheap.
class BellSampler {
  public:
    BellSampler(const StateVector& a, const StateVector& b);
    BellOutcome sample(RngStream& rng) const;
    int n() const { return n_; }

  private:
    int n_;
    StateVector rotated_;
    BasisSampler sampler_;
};

} // namespace gentlegrad::qcore
