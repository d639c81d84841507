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

#include <complex>
#include <cstdint>
#include <vector>

#include "gentlegrad/qcore/pauli.hpp"
#include "gentlegrad/qcore/rng.hpp"

namespace gentlegrad::qcore {

using cplx = std::complex<double>;

/// Dense n-qubit pure state. Qubit 0 is the most significant bit of the
/// amplitude index, so |q0 q1 ... q_{n-1}> lives at index q0*2^{n-1} + ...
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(int n_qubits);

    static StateVector zero(int n_qubits) { return StateVector(n_qubits); }
    static StateVector basis(int n_qubits, std::uint64_t index);
    /// Haar-like random state: i.i.d. complex normal amplitudes, normalized.
    static StateVector random(int n_qubits, RngStream& rng);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    cplx* data() { return amps_.data(); }
    const cplx* data() const { return amps_.data(); }
    cplx amp(std::uint64_t i) const { return amps_[i]; }
    cplx& amp(std::uint64_t i) { return amps_[i]; }
    const std::vector<cplx>& amps() const { return amps_; }

    double norm_sq() const;
    void normalize();

    /// Index-space bit mask of qubit q (qubit 0 = most significant bit).
    std::uint64_t qubit_bit(int q) const { return 1ull << (n_ - 1 - q); }

    StateVector tensor(const StateVector& other) const;

    /// Prepends fresh |0> qubits in front (they become qubits 0..k-1).
    StateVector with_prepended_zeros(int k) const;

  private:
    int n_ = 0;
    std::vector<cplx> amps_;
};

/// Optional control condition in index space: apply only where
/// (index & mask) == value.
struct ControlSpec {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
    bool active() const { return mask != 0; }
};

/// Index-space (x, z) masks of a Pauli word for a given register width.
struct IndexMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
};
IndexMasks index_masks(const PauliString& p);

/// Monotone thread-local counter of elementary state operations (gates,
/// Pauli applications, rotations). The ledgers read it via scopes.
std::uint64_t gate_ops_count();
void add_gate_ops(std::uint64_t k);

struct GateOpsScope {
    std::uint64_t start;
    GateOpsScope() : start(gate_ops_count()) {}
    std::uint64_t elapsed() const { return gate_ops_count() - start; }
};

/// Restores the op counter on scope exit; used where classical work reuses
/// the quantum primitives (e.g. hypothesis-state rotations).
struct GateOpsPause {
    std::uint64_t saved;
    GateOpsPause();
    ~GateOpsPause();
    GateOpsPause(const GateOpsPause&) = delete;
    GateOpsPause& operator=(const GateOpsPause&) = delete;
};

// Raw-buffer primitives shared by StateVector and density-matrix columns.
namespace raw {
void apply_pauli(cplx* amps, int n, const PauliString& p, ControlSpec ctrl = {});
void apply_pauli_rotation(cplx* amps, int n, const PauliString& p, double theta,
                          ControlSpec ctrl = {});
} // namespace raw

/// P|psi> in place.
void apply_pauli(StateVector& s, const PauliString& p, ControlSpec ctrl = {});

/// exp(-i theta P)|psi> in place.
void apply_pauli_rotation(StateVector& s, const PauliString& p, double theta,
                          ControlSpec ctrl = {});

/// <psi|P|psi>, exact.
double expectation(const StateVector& s, const PauliString& p);

/// <psi|diag(o)|psi> for an explicitly diagonal observable, |o_i| <= 1.
double expectation(const StateVector& s, const std::vector<double>& diag);

/// <bra|P|ket>.
cplx pauli_bilinear(const StateVector& bra, const PauliString& p, const StateVector& ket);

cplx inner(const StateVector& a, const StateVector& b);

/// Single +-1 shot of the two-outcome measurement of Hermitian unitary P:
/// Pr[+1] = (1 + <P>)/2.
int sample_outcome(const StateVector& s, const PauliString& p, RngStream& rng);

/// Computational-basis Born sampler with precomputed cumulative weights.
class BasisSampler {
  public:
    explicit BasisSampler(const StateVector& s);
    std::uint64_t sample(RngStream& rng) const;

  private:
    std::vector<double> cdf_;
};

} // namespace gentlegrad::qcore
