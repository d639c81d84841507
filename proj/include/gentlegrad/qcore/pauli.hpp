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
#include <string>

namespace gentlegrad::qcore {

/// Hermitian n-qubit Pauli word stored as x/z bit masks plus an explicit
/// +-1 sign. Bit q of a mask refers to qubit q; per qubit the (x, z) pair
/// encodes I=(0,0), X=(1,0), Z=(0,1), Y=(1,1), with Y carrying its usual
/// i*X*Z phase so the whole word squares to the identity. Global phases
/// beyond the sign are never tracked.
struct PauliString {
    int n = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int sign = +1;

    PauliString() = default;
    PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, int sgn = +1);

    static PauliString identity(int n_qubits) { return PauliString(n_qubits, 0, 0, +1); }

    /// Single-letter word, e.g. Z on qubit `q` of `n` qubits.
    static PauliString single(int n_qubits, int q, char letter, int sgn = +1);

    /// Parse "XZ..Y" style words; '.' and 'I' both mean identity. A leading
    /// '+' or '-' sets the sign. Character j addresses qubit j.
    static PauliString parse(const std::string& word);

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    char letter(int q) const;
    std::string str() const;

    int weight() const;

    bool commutes_with(const PauliString& other) const;

    /// Word product. The result of composing a Hermitian word with itself is
    /// the identity with sign +1; in general the i^k phase of the product is
    /// folded into the sign and must be real (callers compose words whose
    /// product is Hermitian, e.g. Clifford conjugation chains).
    PauliString times(const PauliString& other) const;

    bool operator==(const PauliString& other) const = default;
};

/// Number of Y letters in the word, i.e. popcount(x & z).
int pauli_y_count(const PauliString& p);

/// Phase i^{y_count} * sign as a complex unit; the basis-state action of the
/// word is amp(i -> i^x) = unit * (-1)^{parity(i & z)}.
std::complex<double> pauli_phase_unit(const PauliString& p);

} // namespace gentlegrad::qcore
