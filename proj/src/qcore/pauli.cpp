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
#include "gentlegrad/qcore/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace gentlegrad::qcore {

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, int sgn)
    : n(n_qubits), x_mask(x), z_mask(z), sign(sgn) {
    if (n_qubits < 0 || n_qubits > 63) throw std::invalid_argument("PauliString: bad qubit count");
    if (sgn != 1 && sgn != -1) throw std::invalid_argument("PauliString: sign must be +-1");
    const std::uint64_t valid = (n_qubits == 0) ? 0 : ((1ull << n_qubits) - 1);
    if ((x & ~valid) || (z & ~valid))
        throw std::invalid_argument("PauliString: mask exceeds qubit count");
}

PauliString PauliString::single(int n_qubits, int q, char letter, int sgn) {
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("PauliString: qubit out of range");
    std::uint64_t x = 0, z = 0;
    switch (letter) {
        case 'I': break;
        case 'X': x = 1ull << q; break;
        case 'Y': x = 1ull << q; z = 1ull << q; break;
        case 'Z': z = 1ull << q; break;
        default: throw std::invalid_argument("PauliString: unknown letter");
    }
    return PauliString(n_qubits, x, z, sgn);
}

PauliString PauliString::parse(const std::string& word) {
    std::size_t pos = 0;
    int sgn = +1;
    if (!word.empty() && (word[0] == '+' || word[0] == '-')) {
        sgn = (word[0] == '-') ? -1 : +1;
        pos = 1;
    }
    const std::string body = word.substr(pos);
    if (body.empty() || body.size() > 63) throw std::invalid_argument("PauliString: bad word length");
    std::uint64_t x = 0, z = 0;
    for (std::size_t q = 0; q < body.size(); ++q) {
        switch (body[q]) {
            case 'I': case '.': break;
            case 'X': x |= 1ull << q; break;
            case 'Y': x |= 1ull << q; z |= 1ull << q; break;
            case 'Z': z |= 1ull << q; break;
            default: throw std::invalid_argument("PauliString: unknown letter in word");
        }
    }
    return PauliString(static_cast<int>(body.size()), x, z, sgn);
}

char PauliString::letter(int q) const {
    const bool x = (x_mask >> q) & 1, z = (z_mask >> q) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

std::string PauliString::str() const {
    std::string out = (sign < 0) ? "-" : "";
    for (int q = 0; q < n; ++q) out += letter(q);
    return out;
}

int PauliString::weight() const {
    return std::popcount(x_mask | z_mask);
}

bool PauliString::commutes_with(const PauliString& other) const {
    const int anti = std::popcount(x_mask & other.z_mask) + std::popcount(z_mask & other.x_mask);
    return (anti & 1) == 0;
}

PauliString PauliString::times(const PauliString& other) const {
    if (n != other.n) throw std::invalid_argument("PauliString: qubit count mismatch");
    // Phase bookkeeping in units of i: each word carries i^{#Y}, and
    // reordering X past Z on a qubit contributes (-1).
    int ipow = pauli_y_count(*this) + pauli_y_count(other);
    ipow += 2 * std::popcount(z_mask & other.x_mask);
    const std::uint64_t x = x_mask ^ other.x_mask, z = z_mask ^ other.z_mask;
    ipow -= std::popcount(x & z); // the product word supplies its own i^{#Y}
    ipow &= 3;
    if (ipow == 1 || ipow == 3) throw std::domain_error("PauliString: product is anti-Hermitian");
    int sgn = sign * other.sign * (ipow == 2 ? -1 : +1);
    return PauliString(n, x, z, sgn);
}

int pauli_y_count(const PauliString& p) {
    return std::popcount(p.x_mask & p.z_mask);
}

std::complex<double> pauli_phase_unit(const PauliString& p) {
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return double(p.sign) * units[pauli_y_count(p) & 3];
}

} // namespace gentlegrad::qcore
