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
#include "gentlegrad/qcore/kernels.hpp"

#include <bit>

// Reference kernels. Pair enumeration pivots on the lowest set bit of the
// x mask: indices with that bit clear are paired with their x-flipped
// partner, so every amplitude pair is visited exactly once.

namespace gentlegrad::qcore::kernels {
namespace {

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

void pauli_apply_scalar(cplx* amps, std::size_t dim, std::uint64_t x, std::uint64_t z,
                        cplx unit) {
    if (x == 0) {
        for (std::size_t i = 0; i < dim; ++i)
            amps[i] *= parity(i & z) ? -unit : unit;
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    // phase(i0) = phase(i1) * (-1)^{parity(x & z)} for partner indices.
    const double flip = parity(x & z) ? -1.0 : 1.0;
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & pivot) continue;
        const std::size_t i1 = i0 ^ x;
        const cplx ph1 = parity(i1 & z) ? -unit : unit;
        const cplx a0 = amps[i0];
        amps[i0] = ph1 * amps[i1];
        amps[i1] = flip * ph1 * a0;
    }
}

void pauli_rotate_scalar(cplx* amps, std::size_t dim, std::uint64_t x, std::uint64_t z,
                         cplx unit, double c, double s) {
    if (x == 0) {
        // Diagonal word: amplitude multipliers c -+ i s per z-parity.
        const cplx m0 = c - cplx(0, 1) * s * unit;
        const cplx m1 = c + cplx(0, 1) * s * unit;
        for (std::size_t i = 0; i < dim; ++i)
            amps[i] *= parity(i & z) ? m1 : m0;
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    const cplx w = cplx(0, -1) * s * unit;
    const cplx wc = std::conj(w);
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & pivot) continue;
        const std::size_t i1 = i0 ^ x;
        const double p = parity(i1 & z) ? -1.0 : 1.0;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = c * a0 + p * w * a1;
        amps[i1] = c * a1 - p * wc * a0;
    }
}

double pauli_expectation_scalar(const cplx* amps, std::size_t dim, std::uint64_t x,
                                std::uint64_t z, cplx unit) {
    double acc = 0.0;
    if (x == 0) {
        const double u = unit.real(); // no Y letters when x == 0
        for (std::size_t i = 0; i < dim; ++i) {
            const double w = std::norm(amps[i]);
            acc += parity(i & z) ? -w : w;
        }
        return u * acc;
    }
    const std::uint64_t pivot = x & (~x + 1);
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & pivot) continue;
        const std::size_t i1 = i0 ^ x;
        const cplx ph1 = parity(i1 & z) ? -unit : unit;
        acc += 2.0 * (ph1 * std::conj(amps[i0]) * amps[i1]).real();
    }
    return acc;
}

cplx pauli_bilinear_scalar(const cplx* bra, const cplx* ket, std::size_t dim,
                           std::uint64_t x, std::uint64_t z, cplx unit) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ x;
        const cplx ph = parity(j & z) ? -unit : unit;
        acc += std::conj(bra[i]) * ph * ket[j];
    }
    return acc;
}

double norm_sq_scalar(const cplx* amps, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += std::norm(amps[i]);
    return acc;
}

cplx inner_scalar(const cplx* a, const cplx* b, std::size_t dim) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

void apply_1q_scalar(cplx* amps, std::size_t dim, std::uint64_t target_bit,
                     const cplx m[4]) {
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & target_bit) continue;
        const std::size_t i1 = i0 | target_bit;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable table = {
        pauli_apply_scalar,     pauli_rotate_scalar, pauli_expectation_scalar,
        pauli_bilinear_scalar,  norm_sq_scalar,      inner_scalar,
        apply_1q_scalar,
    };
    return table;
}

} // namespace gentlegrad::qcore::kernels
