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
#include "gentlegrad/models/gradient_state.hpp"

#include <stdexcept>

namespace gentlegrad::models {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

void require_qnn(const LayeredModel& m) {
    if (m.kind() != ModelKind::Qnn)
        throw std::invalid_argument("gradient_state: QNN model required");
}

GateList embedded_fixed(const LayeredModel& m, int k) {
    return qcore::shifted(m.layer(k).fixed, 1, gradient_register_width(m));
}

// exp(i alpha P) on the chosen ancilla branch; qcore rotations implement
// exp(-i theta P), so theta = -alpha.
void branch_rotation(StateVector& s, const PauliString& p, double alpha,
                     qcore::ControlSpec ctrl) {
    qcore::apply_pauli_rotation(s, p, -alpha, ctrl);
}

} // namespace

int gradient_register_width(const LayeredModel& m) {
    require_qnn(m);
    return m.n_data() + 2;
}

qcore::ControlSpec ancilla_is(const LayeredModel& m, int value) {
    const std::uint64_t bit = 1ull << (gradient_register_width(m) - 1);
    return {bit, value ? bit : 0ull};
}

PauliString embedded_generator(const LayeredModel& m, int k) {
    const PauliString& p = m.layer(k).generator;
    return PauliString(gradient_register_width(m), p.x_mask << 1, p.z_mask << 1, p.sign);
}

PauliString ancilla_x(const LayeredModel& m) {
    return PauliString::single(gradient_register_width(m), 0, 'X');
}

double ancilla_x_expectation(const StateVector& gradient_state) {
    return qcore::expectation(gradient_state,
                              PauliString::single(gradient_state.n(), 0, 'X'));
}

StateVector build_gradient_state(const LayeredModel& m, const StateVector& input, int k) {
    require_qnn(m);
    const int M = m.num_layers();
    if (k < 0 || k >= M) throw std::out_of_range("build_gradient_state: layer index");
    if (input.n() != m.n_data())
        throw std::invalid_argument("build_gradient_state: input qubit count mismatch");

    const int gw = gradient_register_width(m);
    const PauliString z_out = PauliString::single(gw, 1, 'Z');
    const auto anc0 = ancilla_is(m, 0);
    const auto anc1 = ancilla_is(m, 1);

    StateVector s = input.with_prepended_zeros(2);
    qcore::apply_gate(s, qcore::Gate::h(0));

    // |0> branch: layers up to k, with the k-th angle advanced by pi/2.
    for (int j = 0; j < k; ++j) {
        qcore::apply_gate_list(s, embedded_fixed(m, j), anc0);
        branch_rotation(s, embedded_generator(m, j), m.theta()[j], anc0);
    }
    qcore::apply_gate_list(s, embedded_fixed(m, k), anc0);
    branch_rotation(s, embedded_generator(m, k), m.theta()[k] + kHalfPi, anc0);

    // |1> branch: full forward pass, Z on the output qubit, then unwind the
    // layers above k.
    for (int j = 0; j < M; ++j) {
        qcore::apply_gate_list(s, embedded_fixed(m, j), anc1);
        branch_rotation(s, embedded_generator(m, j), m.theta()[j], anc1);
    }
    qcore::apply_pauli(s, z_out, anc1);
    for (int j = M - 1; j > k; --j) {
        branch_rotation(s, embedded_generator(m, j), -m.theta()[j], anc1);
        qcore::apply_gate_list(s, qcore::inverted(embedded_fixed(m, j)), anc1);
    }
    return s;
}

std::vector<qcore::ControlledGates> advance_ops(const LayeredModel& m, int k) {
    require_qnn(m);
    const int M = m.num_layers();
    if (k < 0 || k + 1 >= M) throw std::out_of_range("advance_ops: no layer to advance into");

    const PauliString p_k = embedded_generator(m, k);
    const PauliString p_next = embedded_generator(m, k + 1);
    const GateList u_next = embedded_fixed(m, k + 1);

    // Gate::rot implements exp(-i angle P); branch rotations are exp(i a P).
    qcore::ControlledGates branch0{{}, ancilla_is(m, 0)};
    branch0.gates.push_back(qcore::Gate::rot(p_k, kHalfPi)); // exp(-i pi/2 P_k)
    branch0.gates.insert(branch0.gates.end(), u_next.begin(), u_next.end());
    branch0.gates.push_back(qcore::Gate::rot(p_next, -(m.theta()[k + 1] + kHalfPi)));

    qcore::ControlledGates branch1{u_next, ancilla_is(m, 1)};
    branch1.gates.push_back(qcore::Gate::rot(p_next, -m.theta()[k + 1]));
    return {std::move(branch0), std::move(branch1)};
}

void advance_gradient_state(StateVector& s, const LayeredModel& m, int k) {
    if (s.n() != gradient_register_width(m))
        throw std::invalid_argument("advance_gradient_state: register width mismatch");
    for (const auto& op : advance_ops(m, k))
        qcore::apply_gate_list(s, op.gates, op.ctrl);
}

LayeredModel build_reduction_qnn(const std::vector<GateList>& observable_circuits, int n_data) {
    if (observable_circuits.empty())
        throw std::invalid_argument("build_reduction_qnn: empty circuit list");
    const int w = n_data + 1;
    const int M = static_cast<int>(observable_circuits.size());
    // Y on the output qubit, Z on the first data qubit.
    const PauliString gen(w, 0b01, 0b11);

    std::vector<Layer> layers(M);
    for (int k = 0; k < M; ++k) {
        GateList data_part;
        if (k > 0) data_part = qcore::inverted(observable_circuits[k - 1]);
        const GateList& uk = observable_circuits[k];
        data_part.insert(data_part.end(), uk.begin(), uk.end());
        GateList fixed = qcore::shifted(data_part, 1, w);
        if (k == 0) fixed.insert(fixed.begin(), qcore::Gate::h(0));
        layers[k].fixed = std::move(fixed);
        layers[k].generator = gen;
    }
    return LayeredModel::qnn(n_data, std::move(layers), std::vector<double>(M, 0.0));
}

} // namespace gentlegrad::models
