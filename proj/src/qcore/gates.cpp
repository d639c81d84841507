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
#include "gentlegrad/qcore/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "gentlegrad/qcore/kernels.hpp"

namespace gentlegrad::qcore {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void dense_1q(const Gate& g, cplx m[4]) {
    switch (g.kind) {
        case Gate::Kind::H:
            m[0] = kInvSqrt2; m[1] = kInvSqrt2; m[2] = kInvSqrt2; m[3] = -kInvSqrt2;
            break;
        case Gate::Kind::S:
            m[0] = 1.0; m[1] = 0.0; m[2] = 0.0; m[3] = cplx(0, 1);
            break;
        case Gate::Kind::Sdg:
            m[0] = 1.0; m[1] = 0.0; m[2] = 0.0; m[3] = cplx(0, -1);
            break;
        case Gate::Kind::X:
            m[0] = 0.0; m[1] = 1.0; m[2] = 1.0; m[3] = 0.0;
            break;
        case Gate::Kind::Y:
            m[0] = 0.0; m[1] = cplx(0, -1); m[2] = cplx(0, 1); m[3] = 0.0;
            break;
        case Gate::Kind::Z:
            m[0] = 1.0; m[1] = 0.0; m[2] = 0.0; m[3] = -1.0;
            break;
        default:
            throw std::logic_error("dense_1q: not a single-qubit gate");
    }
}

void apply_1q_controlled(cplx* amps, std::size_t dim, std::uint64_t target_bit,
                         const cplx m[4], ControlSpec ctrl) {
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & target_bit) continue;
        if ((i0 & ctrl.mask) != ctrl.value) continue;
        const std::size_t i1 = i0 | target_bit;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

} // namespace

Gate Gate::rot(PauliString generator, double theta) {
    Gate g;
    g.kind = Kind::Rot;
    g.word = std::move(generator);
    g.angle = theta;
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case Kind::S: g.kind = Kind::Sdg; break;
        case Kind::Sdg: g.kind = Kind::S; break;
        case Kind::Rot: g.angle = -angle; break;
        default: break; // H, X, Y, Z, Cnot are involutions
    }
    return g;
}

std::string Gate::name() const {
    switch (kind) {
        case Kind::H: return "H";
        case Kind::S: return "S";
        case Kind::Sdg: return "Sdg";
        case Kind::X: return "X";
        case Kind::Y: return "Y";
        case Kind::Z: return "Z";
        case Kind::Cnot: return "CNOT";
        case Kind::Rot: return "ROT";
    }
    return "?";
}

namespace raw {

void apply_gate(cplx* amps, int n, const Gate& g, ControlSpec ctrl) {
    const std::size_t dim = std::size_t(1) << n;
    if (g.kind == Gate::Kind::Rot) {
        if (g.word.n != n) throw std::invalid_argument("apply_gate: rotation word width mismatch");
        apply_pauli_rotation(amps, n, g.word, g.angle, ctrl);
        return;
    }
    if (g.q0 < 0 || g.q0 >= n) throw std::invalid_argument("apply_gate: qubit out of range");
    add_gate_ops(1);
    if (g.kind == Gate::Kind::Cnot) {
        if (g.q1 < 0 || g.q1 >= n || g.q1 == g.q0)
            throw std::invalid_argument("apply_gate: bad CNOT qubits");
        const std::uint64_t cbit = 1ull << (n - 1 - g.q0);
        const std::uint64_t tbit = 1ull << (n - 1 - g.q1);
        ControlSpec merged{ctrl.mask | cbit, ctrl.value | cbit};
        if (ctrl.mask & (cbit | tbit))
            throw std::invalid_argument("apply_gate: gate touches a control qubit");
        const cplx mx[4] = {0.0, 1.0, 1.0, 0.0};
        apply_1q_controlled(amps, dim, tbit, mx, merged);
        return;
    }
    cplx m[4];
    dense_1q(g, m);
    const std::uint64_t tbit = 1ull << (n - 1 - g.q0);
    if (ctrl.mask & tbit) throw std::invalid_argument("apply_gate: gate touches a control qubit");
    if (!ctrl.active()) {
        kernels::active().apply_1q(amps, dim, tbit, m);
    } else {
        apply_1q_controlled(amps, dim, tbit, m, ctrl);
    }
}

} // namespace raw

void apply_gate(StateVector& s, const Gate& g, ControlSpec ctrl) {
    raw::apply_gate(s.data(), s.n(), g, ctrl);
}

void apply_gate_list(StateVector& s, const GateList& gates, ControlSpec ctrl) {
    for (const Gate& g : gates) apply_gate(s, g, ctrl);
}

GateList inverted(const GateList& gates) {
    GateList out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(it->inverse());
    return out;
}

GateList shifted(const GateList& gates, int offset, int new_width) {
    GateList out;
    out.reserve(gates.size());
    for (Gate g : gates) {
        g.q0 += offset;
        if (g.q1 >= 0) g.q1 += offset;
        if (g.kind == Gate::Kind::Rot) {
            if (g.word.n + offset > new_width)
                throw std::invalid_argument("shifted: word does not fit new width");
            g.word = PauliString(new_width, g.word.x_mask << offset, g.word.z_mask << offset,
                                 g.word.sign);
        }
        out.push_back(g);
    }
    return out;
}

} // namespace gentlegrad::qcore
