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
#include <cstddef>
#include <cstdint>
#include <string>

namespace gentlegrad::qcore::kernels {

using cplx = std::complex<double>;

// All masks below live in *index space*: bit 0 is the least significant bit
// of the amplitude index. Callers translate qubit-numbered masks (qubit 0 is
// the most significant index bit) before dispatching. `unit` is the word's
// sign * i^{#Y} factor; the per-index action of a Pauli word is
//   amp(i -> i^x) = unit * (-1)^{parity(i & z)}.

/// In-place P|psi>.
using PauliApplyFn = void (*)(cplx* amps, std::size_t dim, std::uint64_t x,
                              std::uint64_t z, cplx unit);

/// In-place exp(-i theta P)|psi> given c = cos(theta), s = sin(theta).
using PauliRotateFn = void (*)(cplx* amps, std::size_t dim, std::uint64_t x,
                               std::uint64_t z, cplx unit, double c, double s);

/// <psi|P|psi>; real for Hermitian words (imaginary part dropped).
using PauliExpectationFn = double (*)(const cplx* amps, std::size_t dim,
                                      std::uint64_t x, std::uint64_t z, cplx unit);

/// <bra|P|ket> as a complex number.
using PauliBilinearFn = cplx (*)(const cplx* bra, const cplx* ket, std::size_t dim,
                                 std::uint64_t x, std::uint64_t z, cplx unit);

/// Sum |amps|^2.
using NormSqFn = double (*)(const cplx* amps, std::size_t dim);

/// <a|b>.
using InnerFn = cplx (*)(const cplx* a, const cplx* b, std::size_t dim);

/// In-place dense single-qubit gate on the qubit whose index bit is
/// `target_bit`; m is row-major [ [m00, m01], [m10, m11] ].
using Apply1qFn = void (*)(cplx* amps, std::size_t dim, std::uint64_t target_bit,
                           const cplx m[4]);

struct KernelTable {
    PauliApplyFn pauli_apply;
    PauliRotateFn pauli_rotate;
    PauliExpectationFn pauli_expectation;
    PauliBilinearFn pauli_bilinear;
    NormSqFn norm_sq;
    InnerFn inner;
    Apply1qFn apply_1q;
};

enum class Backend { Scalar, Avx2 };

/// Kernel set currently in use. Selected once at startup from CPU features;
/// override with force_backend() or GENTLEGRAD_KERNELS=scalar|avx2.
const KernelTable& active();
Backend active_backend();
std::string backend_name(Backend b);

/// Returns false if the requested backend is unavailable on this machine.
bool force_backend(Backend b);

bool avx2_available();

const KernelTable& scalar_table();
#if defined(GENTLEGRAD_BUILD_AVX2)
const KernelTable& avx2_table();
#endif

} // namespace gentlegrad::qcore::kernels
