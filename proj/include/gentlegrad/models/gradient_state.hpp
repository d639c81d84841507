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

#include "gentlegrad/models/model.hpp"

namespace gentlegrad::models {

// Gradient-state register layout for a QNN on n data qubits: qubit 0 is the
// ancilla (measured in X), qubit 1 the output qubit, qubits 2..n+1 the data.

/// Register width used by the gradient states of model `m`.
int gradient_register_width(const LayeredModel& m);

/// Control conditions on the ancilla qubit.
qcore::ControlSpec ancilla_is(const LayeredModel& m, int value);

/// The model's layer-k generator embedded into the gradient register.
PauliString embedded_generator(const LayeredModel& m, int k);

/// X observable on the ancilla qubit.
PauliString ancilla_x(const LayeredModel& m);

double ancilla_x_expectation(const StateVector& gradient_state);

/// Builds (|0>|Psi_k> + |1>|Phi_k>)/sqrt(2) for layer index k (0-based).
/// The X expectation on the ancilla equals (1/2) d/dtheta_k QNN(input).
StateVector build_gradient_state(const LayeredModel& m, const StateVector& input, int k);

/// The controlled unitaries advancing gradient state k to k+1; layer-local,
/// so their gate count is independent of the total layer count.
std::vector<qcore::ControlledGates> advance_ops(const LayeredModel& m, int k);

/// Advances gradient state k to k+1 in place. Requires k+1 < M.
void advance_gradient_state(StateVector& s, const LayeredModel& m, int k);

/// QNN whose gradient at theta = 0 encodes the expectations of the
/// observables U_k^dag Z_1 U_k: d/dtheta_k QNN = 2 <psi|E_k|psi>.
LayeredModel build_reduction_qnn(const std::vector<GateList>& observable_circuits, int n_data);

} // namespace gentlegrad::models
