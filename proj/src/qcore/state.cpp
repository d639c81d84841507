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
#include "gentlegrad/qcore/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gentlegrad/qcore/kernels.hpp"

namespace gentlegrad::qcore {

namespace {

thread_local std::uint64_t t_gate_ops = 0;

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

void check_dims(int state_n, const PauliString& p) {
    if (state_n != p.n) throw std::invalid_argument("qcore: qubit count mismatch");
}

} // namespace

std::uint64_t gate_ops_count() { return t_gate_ops; }
void add_gate_ops(std::uint64_t k) { t_gate_ops += k; }

GateOpsPause::GateOpsPause() : saved(t_gate_ops) {}
GateOpsPause::~GateOpsPause() { t_gate_ops = saved; }

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("StateVector: bad qubit count");
    amps_.assign(std::size_t(1) << n_qubits, cplx(0.0, 0.0));
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw std::invalid_argument("StateVector: basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::random(int n_qubits, RngStream& rng) {
    StateVector s(n_qubits);
    for (auto& a : s.amps_) a = cplx(rng.normal(), rng.normal());
    s.normalize();
    return s;
}

double StateVector::norm_sq() const {
    return kernels::active().norm_sq(amps_.data(), amps_.size());
}

void StateVector::normalize() {
    const double nrm = std::sqrt(norm_sq());
    if (nrm == 0.0) throw std::domain_error("StateVector: cannot normalize zero vector");
    for (auto& a : amps_) a /= nrm;
}

StateVector StateVector::tensor(const StateVector& other) const {
    StateVector out(n_ + other.n_);
    const std::size_t od = other.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < od; ++j)
            out.amps_[i * od + j] = amps_[i] * other.amps_[j];
    return out;
}

StateVector StateVector::with_prepended_zeros(int k) const {
    StateVector out(n_ + k);
    out.amps_[0] = 0.0;
    std::copy(amps_.begin(), amps_.end(), out.amps_.begin());
    return out;
}

IndexMasks index_masks(const PauliString& p) {
    IndexMasks m;
    for (int q = 0; q < p.n; ++q) {
        const std::uint64_t bit = 1ull << (p.n - 1 - q);
        if ((p.x_mask >> q) & 1) m.x |= bit;
        if ((p.z_mask >> q) & 1) m.z |= bit;
    }
    return m;
}

namespace raw {

void apply_pauli(cplx* amps, int n, const PauliString& p, ControlSpec ctrl) {
    const std::size_t dim = std::size_t(1) << n;
    const auto [x, z] = index_masks(p);
    const cplx unit = pauli_phase_unit(p);
    add_gate_ops(1);
    if (!ctrl.active()) {
        kernels::active().pauli_apply(amps, dim, x, z, unit);
        return;
    }
    if ((x | z) & ctrl.mask)
        throw std::invalid_argument("apply_pauli: word acts on a control qubit");
    if (x == 0) {
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & ctrl.mask) != ctrl.value) continue;
            amps[i] *= parity(i & z) ? -unit : unit;
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    const double flip = parity(x & z) ? -1.0 : 1.0;
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & pivot) continue;
        if ((i0 & ctrl.mask) != ctrl.value) continue;
        const std::size_t i1 = i0 ^ x;
        const cplx ph1 = parity(i1 & z) ? -unit : unit;
        const cplx a0 = amps[i0];
        amps[i0] = ph1 * amps[i1];
        amps[i1] = flip * ph1 * a0;
    }
}

void apply_pauli_rotation(cplx* amps, int n, const PauliString& p, double theta,
                          ControlSpec ctrl) {
    const std::size_t dim = std::size_t(1) << n;
    const auto [x, z] = index_masks(p);
    const cplx unit = pauli_phase_unit(p);
    const double c = std::cos(theta), s = std::sin(theta);
    add_gate_ops(1);
    if (!ctrl.active()) {
        kernels::active().pauli_rotate(amps, dim, x, z, unit, c, s);
        return;
    }
    if ((x | z) & ctrl.mask)
        throw std::invalid_argument("apply_pauli_rotation: word acts on a control qubit");
    if (x == 0) {
        const cplx m0 = c - cplx(0, 1) * s * unit;
        const cplx m1 = c + cplx(0, 1) * s * unit;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & ctrl.mask) != ctrl.value) continue;
            amps[i] *= parity(i & z) ? m1 : m0;
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    const cplx w = cplx(0, -1) * s * unit;
    const cplx wc = std::conj(w);
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & pivot) continue;
        if ((i0 & ctrl.mask) != ctrl.value) continue;
        const std::size_t i1 = i0 ^ x;
        const double pm = parity(i1 & z) ? -1.0 : 1.0;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = c * a0 + pm * w * a1;
        amps[i1] = c * a1 - pm * wc * a0;
    }
}

} // namespace raw

void apply_pauli(StateVector& s, const PauliString& p, ControlSpec ctrl) {
    check_dims(s.n(), p);
    raw::apply_pauli(s.data(), s.n(), p, ctrl);
}

void apply_pauli_rotation(StateVector& s, const PauliString& p, double theta, ControlSpec ctrl) {
    check_dims(s.n(), p);
    raw::apply_pauli_rotation(s.data(), s.n(), p, theta, ctrl);
}

double expectation(const StateVector& s, const PauliString& p) {
    check_dims(s.n(), p);
    const auto [x, z] = index_masks(p);
    return kernels::active().pauli_expectation(s.data(), s.dim(), x, z, pauli_phase_unit(p));
}

double expectation(const StateVector& s, const std::vector<double>& diag) {
    if (diag.size() != s.dim()) throw std::invalid_argument("expectation: diagonal size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (std::abs(diag[i]) > 1.0 + 1e-12)
            throw std::invalid_argument("expectation: diagonal entry outside [-1, 1]");
        acc += diag[i] * std::norm(s.amp(i));
    }
    return acc;
}

cplx pauli_bilinear(const StateVector& bra, const PauliString& p, const StateVector& ket) {
    check_dims(bra.n(), p);
    check_dims(ket.n(), p);
    const auto [x, z] = index_masks(p);
    return kernels::active().pauli_bilinear(bra.data(), ket.data(), ket.dim(), x, z,
                                            pauli_phase_unit(p));
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("inner: qubit count mismatch");
    return kernels::active().inner(a.data(), b.data(), a.dim());
}

int sample_outcome(const StateVector& s, const PauliString& p, RngStream& rng) {
    const double val = expectation(s, p);
    const double prob_plus = std::clamp(0.5 * (1.0 + val), 0.0, 1.0);
    return rng.bernoulli(prob_plus) ? +1 : -1;
}

BasisSampler::BasisSampler(const StateVector& s) {
    cdf_.resize(s.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        acc += std::norm(s.amp(i));
        cdf_[i] = acc;
    }
}

std::uint64_t BasisSampler::sample(RngStream& rng) const {
    const double u = rng.uniform() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

} // namespace gentlegrad::qcore
