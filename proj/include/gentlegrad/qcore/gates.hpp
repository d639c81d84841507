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

#include <string>
#include <vector>

#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::qcore {

/// Fixed-circuit gate vocabulary: Clifford generators plus Pauli rotations
/// with frozen angles.
struct Gate {
    enum class Kind { H, S, Sdg, X, Y, Z, Cnot, Rot };

    Kind kind = Kind::H;
    int q0 = 0;      // target (control for Cnot)
    int q1 = -1;     // Cnot target
    PauliString word; // Rot generator (full-width word)
    double angle = 0.0;

    static Gate h(int q) { return {Kind::H, q}; }
    static Gate s(int q) { return {Kind::S, q}; }
    static Gate sdg(int q) { return {Kind::Sdg, q}; }
    static Gate x(int q) { return {Kind::X, q}; }
    static Gate y(int q) { return {Kind::Y, q}; }
    static Gate z(int q) { return {Kind::Z, q}; }
    static Gate cnot(int control, int target) { return {Kind::Cnot, control, target}; }
    static Gate rot(PauliString generator, double theta);

    Gate inverse() const;
    std::string name() const;
};

using GateList = std::vector<Gate>;

/// A gate-list segment applied under one control condition; protocols apply
/// the same segments to quantum registers and the classical hypothesis state.
struct ControlledGates {
    GateList gates;
    ControlSpec ctrl;
};

void apply_gate(StateVector& s, const Gate& g, ControlSpec ctrl = {});
void apply_gate_list(StateVector& s, const GateList& gates, ControlSpec ctrl = {});

/// Gate list implementing the inverse circuit (reversed, element-inverted).
GateList inverted(const GateList& gates);

/// Re-indexes every gate by `offset` qubits (for embedding an n-qubit
/// circuit into a wider register whose extra qubits are prepended).
GateList shifted(const GateList& gates, int offset, int new_width);

namespace raw {
void apply_gate(cplx* amps, int n, const Gate& g, ControlSpec ctrl = {});
} // namespace raw

} // namespace gentlegrad::qcore
