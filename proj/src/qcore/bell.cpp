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
#include "gentlegrad/qcore/bell.hpp"

#include <stdexcept>

#include "gentlegrad/qcore/gates.hpp"

namespace gentlegrad::qcore {

namespace {

StateVector rotate_to_bell_frame(const StateVector& a, const StateVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("bell_sample_pair: qubit count mismatch");
    StateVector joint = a.tensor(b);
    const int n = a.n();
    for (int q = 0; q < n; ++q) {
        apply_gate(joint, Gate::cnot(q, n + q));
        apply_gate(joint, Gate::h(q));
    }
    return joint;
}

BellOutcome outcome_from_index(std::uint64_t idx, int n) {
    BellOutcome out(n);
    for (int q = 0; q < n; ++q) {
        const int bit_a = static_cast<int>((idx >> (2 * n - 1 - q)) & 1);
        const int bit_b = static_cast<int>((idx >> (n - 1 - q)) & 1);
        out[q] = 2 * bit_a + bit_b;
    }
    return out;
}

} // namespace

int bell_pauli_eigenvalue(char letter, int bell_index) {
    int row;
    switch (letter) {
        case 'I': case '.': row = 0; break;
        case 'X': row = 1; break;
        case 'Y': row = 2; break;
        case 'Z': row = 3; break;
        default: throw std::invalid_argument("bell_pauli_eigenvalue: unknown letter");
    }
    return kBellPauliEigen[row][bell_index];
}

BellOutcome bell_sample_pair(const StateVector& a, const StateVector& b, RngStream& rng) {
    const StateVector joint = rotate_to_bell_frame(a, b);
    BasisSampler sampler(joint);
    return outcome_from_index(sampler.sample(rng), a.n());
}

BellSampler::BellSampler(const StateVector& a, const StateVector& b)
    : n_(a.n()), rotated_(rotate_to_bell_frame(a, b)), sampler_(rotated_) {}

BellOutcome BellSampler::sample(RngStream& rng) const {
    return outcome_from_index(sampler_.sample(rng), n_);
}

} // namespace gentlegrad::qcore
