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
#include "gentlegrad/shadows/clifford.hpp"

#include <stdexcept>

namespace gentlegrad::shadows {

namespace {

inline bool bit(std::uint64_t mask, int q) { return (mask >> q) & 1; }

PauliString random_word_on_block(int n, int lo, RngStream& rng, bool nonidentity) {
    while (true) {
        std::uint64_t x = 0, z = 0;
        for (int q = lo; q < n; ++q) {
            switch (rng.below(4)) {
                case 1: x |= 1ull << q; break;
                case 2: z |= 1ull << q; break;
                case 3: x |= 1ull << q; z |= 1ull << q; break;
                default: break;
            }
        }
        const int sign = rng.below(2) ? +1 : -1;
        PauliString p(n, x, z, sign);
        if (!nonidentity || !p.is_identity()) return p;
    }
}

} // namespace

bool CliffordTableau::is_symplectic() const {
    if (static_cast<int>(rows.size()) != 2 * n) return false;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = a; b < 2 * n; ++b) {
            const bool should_anticommute = (b == a + n);
            if (rows[a].commutes_with(rows[b]) == should_anticommute) return false;
        }
    return true;
}

void conjugate_pauli(PauliString& p, const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::H: {
            const int q = g.q0;
            const bool x = bit(p.x_mask, q), z = bit(p.z_mask, q);
            if (x && z) p.sign = -p.sign; // Y -> -Y
            // swap x and z bits
            p.x_mask = (p.x_mask & ~(1ull << q)) | (std::uint64_t(z) << q);
            p.z_mask = (p.z_mask & ~(1ull << q)) | (std::uint64_t(x) << q);
            break;
        }
        case Gate::Kind::S: {
            const int q = g.q0;
            const bool x = bit(p.x_mask, q), z = bit(p.z_mask, q);
            if (x && z) p.sign = -p.sign; // Y -> -X
            if (x) p.z_mask ^= 1ull << q;
            break;
        }
        case Gate::Kind::Sdg: {
            const int q = g.q0;
            const bool x = bit(p.x_mask, q), z = bit(p.z_mask, q);
            if (x && !z) p.sign = -p.sign; // X -> -Y
            if (x) p.z_mask ^= 1ull << q;
            break;
        }
        case Gate::Kind::X: {
            if (bit(p.z_mask, g.q0)) p.sign = -p.sign;
            break;
        }
        case Gate::Kind::Y: {
            if (bit(p.x_mask, g.q0) != bit(p.z_mask, g.q0)) p.sign = -p.sign;
            break;
        }
        case Gate::Kind::Z: {
            if (bit(p.x_mask, g.q0)) p.sign = -p.sign;
            break;
        }
        case Gate::Kind::Cnot: {
            const int c = g.q0, t = g.q1;
            const bool xc = bit(p.x_mask, c), zc = bit(p.z_mask, c);
            const bool xt = bit(p.x_mask, t), zt = bit(p.z_mask, t);
            if (xc && zt && (xt == zc)) p.sign = -p.sign;
            if (xc) p.x_mask ^= 1ull << t;
            if (zt) p.z_mask ^= 1ull << c;
            break;
        }
        case Gate::Kind::Rot:
            throw std::invalid_argument("conjugate_pauli: rotations are not Clifford gates");
    }
}

void conjugate_pauli(PauliString& p, const GateList& gates) {
    for (const Gate& g : gates) conjugate_pauli(p, g);
}

CliffordTableau tableau_of(const GateList& gates, int n) {
    CliffordTableau t;
    t.n = n;
    t.rows.reserve(2 * n);
    for (int q = 0; q < n; ++q) {
        PauliString p = PauliString::single(n, q, 'X');
        conjugate_pauli(p, gates);
        t.rows.push_back(p);
    }
    for (int q = 0; q < n; ++q) {
        PauliString p = PauliString::single(n, q, 'Z');
        conjugate_pauli(p, gates);
        t.rows.push_back(p);
    }
    return t;
}

namespace {

// Gates mapping the anticommuting pair (p, q) to (X_j, Z_j); p and q are
// conjugated along. All appended gates act on qubits >= j.
GateList sweep_pair_to_axes(PauliString& p, PauliString& q, int j) {
    GateList v;
    auto emit = [&](Gate g) {
        conjugate_pauli(p, g);
        conjugate_pauli(q, g);
        v.push_back(g);
    };

    // Reduce p to +X_j.
    for (int a = j; a < p.n; ++a) {
        const char letter = p.letter(a);
        if (letter == 'Z') emit(Gate::h(a));
        else if (letter == 'Y') emit(Gate::sdg(a));
    }
    if (p.letter(j) != 'X') {
        for (int a = j + 1; a < p.n; ++a)
            if (p.letter(a) == 'X') {
                emit(Gate::cnot(a, j));
                break;
            }
    }
    for (int a = j + 1; a < p.n; ++a)
        if (p.letter(a) == 'X') emit(Gate::cnot(j, a));
    if (p.sign < 0) emit(Gate::z(j));

    // q anticommutes with X_j, so it carries Z or Y on qubit j.
    if (q.letter(j) == 'Y') {
        emit(Gate::h(j));
        emit(Gate::s(j));
        emit(Gate::h(j));
    }
    for (int a = j + 1; a < q.n; ++a) {
        const char letter = q.letter(a);
        if (letter == 'I') continue;
        if (letter == 'X') emit(Gate::h(a));
        else if (letter == 'Y') { emit(Gate::sdg(a)); emit(Gate::h(a)); }
        emit(Gate::cnot(a, j));
    }
    if (q.sign < 0) emit(Gate::x(j));

    if (p.str() != PauliString::single(p.n, j, 'X').str() ||
        q.str() != PauliString::single(q.n, j, 'Z').str())
        throw std::logic_error("sweep_pair_to_axes: reduction failed");
    return v;
}

} // namespace

SampledClifford sample_random_clifford(int n, RngStream& rng) {
    if (n < 1 || n > 16) throw std::invalid_argument("sample_random_clifford: bad qubit count");
    std::vector<GateList> sweeps;
    sweeps.reserve(n);
    for (int j = 0; j < n; ++j) {
        PauliString p = random_word_on_block(n, j, rng, true);
        PauliString q = random_word_on_block(n, j, rng, false);
        while (p.commutes_with(q)) q = random_word_on_block(n, j, rng, false);
        sweeps.push_back(sweep_pair_to_axes(p, q, j));
    }
    // U = V_0^dag V_1^dag ... V_{n-1}^dag; the innermost factor acts first.
    SampledClifford out;
    for (int j = n - 1; j >= 0; --j) {
        const GateList inv = qcore::inverted(sweeps[j]);
        out.gates.insert(out.gates.end(), inv.begin(), inv.end());
    }
    out.tableau = tableau_of(out.gates, n);
    return out;
}

} // namespace gentlegrad::shadows
