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

#if defined(GENTLEGRAD_BUILD_AVX2)

#include <bit>
#include <immintrin.h>

// AVX2 variants of the statevector kernels. One __m256d holds two
// interleaved complex<double> amplitudes. Pair loops vectorize when the
// pivot bit (lowest set x bit) is above index bit 0, which makes both the
// i0 and i1 = i0^x runs contiguous; the remaining shapes fall back to the
// scalar reference kernels, which equivalence tests pin against these.

namespace gentlegrad::qcore::kernels {
namespace {

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

inline double* re_ptr(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* re_ptr(const cplx* p) { return reinterpret_cast<const double*>(p); }

// Lane-wise (a * w) for a constant complex w.
inline __m256d cmul_const(__m256d a, __m256d w_re, __m256d w_im) {
    const __m256d a_sw = _mm256_permute_pd(a, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(a, w_re), _mm256_mul_pd(a_sw, w_im));
}

// Sign-flip masks for the two complexes in a vector: entry [b] flips the
// vector sign when the base parity is b; `alt` additionally flips the upper
// complex (used when bit 0 of z toggles the parity between lanes).
struct SignMasks {
    __m256d mask[2];
};

inline SignMasks make_sign_masks(bool alt) {
    const double neg = -0.0;
    SignMasks s;
    if (alt) {
        s.mask[0] = _mm256_set_pd(neg, neg, 0.0, 0.0);
        s.mask[1] = _mm256_set_pd(0.0, 0.0, neg, neg);
    } else {
        s.mask[0] = _mm256_setzero_pd();
        s.mask[1] = _mm256_set1_pd(neg);
    }
    return s;
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void pauli_apply_avx2(cplx* amps, std::size_t dim, std::uint64_t x, std::uint64_t z,
                      cplx unit) {
    if (dim < 4 || (x & 1)) {
        scalar_table().pauli_apply(amps, dim, x, z, unit);
        return;
    }
    const __m256d u_re = _mm256_set1_pd(unit.real());
    const __m256d u_im = _mm256_set1_pd(unit.imag());
    const SignMasks sm = make_sign_masks((z & 1) != 0);
    if (x == 0) {
        double* p = re_ptr(amps);
        for (std::size_t i = 0; i < dim; i += 2) {
            const int b = parity(i & z);
            const __m256d a = _mm256_loadu_pd(p + 2 * i);
            __m256d r = cmul_const(a, u_re, u_im);
            r = _mm256_xor_pd(r, sm.mask[b]);
            _mm256_storeu_pd(p + 2 * i, r);
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    const bool flip = parity(x & z);
    const __m256d flipmask = flip ? _mm256_set1_pd(-0.0) : _mm256_setzero_pd();
    double* p = re_ptr(amps);
    for (std::size_t base = 0; base < dim; base += 2 * pivot) {
        for (std::size_t t = 0; t < pivot; t += 2) {
            const std::size_t i0 = base + t;
            const std::size_t i1 = i0 ^ x;
            const int b = parity(i1 & z);
            const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
            __m256d r0 = _mm256_xor_pd(cmul_const(a1, u_re, u_im), sm.mask[b]);
            __m256d r1 = _mm256_xor_pd(cmul_const(a0, u_re, u_im), sm.mask[b]);
            r1 = _mm256_xor_pd(r1, flipmask);
            _mm256_storeu_pd(p + 2 * i0, r0);
            _mm256_storeu_pd(p + 2 * i1, r1);
        }
    }
}

void pauli_rotate_avx2(cplx* amps, std::size_t dim, std::uint64_t x, std::uint64_t z,
                       cplx unit, double c, double s) {
    if (dim < 4 || (x & 1)) {
        scalar_table().pauli_rotate(amps, dim, x, z, unit, c, s);
        return;
    }
    double* p = re_ptr(amps);
    if (x == 0) {
        // Two diagonal multipliers selected by z-parity.
        const cplx m0 = c - cplx(0, 1) * s * unit;
        const cplx m1 = c + cplx(0, 1) * s * unit;
        const bool alt = (z & 1) != 0;
        // mults[b] holds the multipliers for (lane0 parity b, lane1 parity b^alt).
        const cplx lut[2] = {m0, m1};
        __m256d mre[2], mim[2];
        for (int b = 0; b < 2; ++b) {
            const cplx lo = lut[b];
            const cplx hi = lut[b ^ (alt ? 1 : 0)];
            mre[b] = _mm256_set_pd(hi.real(), hi.real(), lo.real(), lo.real());
            mim[b] = _mm256_set_pd(hi.imag(), hi.imag(), lo.imag(), lo.imag());
        }
        for (std::size_t i = 0; i < dim; i += 2) {
            const int b = parity(i & z);
            const __m256d a = _mm256_loadu_pd(p + 2 * i);
            _mm256_storeu_pd(p + 2 * i, cmul_const(a, mre[b], mim[b]));
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    const cplx w = cplx(0, -1) * s * unit;
    const __m256d cvec = _mm256_set1_pd(c);
    const __m256d w_re = _mm256_set1_pd(w.real());
    const __m256d w_im = _mm256_set1_pd(w.imag());
    const __m256d wc_re = _mm256_set1_pd(w.real());
    const __m256d wc_im = _mm256_set1_pd(-w.imag());
    const SignMasks sm = make_sign_masks((z & 1) != 0);
    const __m256d negmask = _mm256_set1_pd(-0.0);
    for (std::size_t base = 0; base < dim; base += 2 * pivot) {
        for (std::size_t t = 0; t < pivot; t += 2) {
            const std::size_t i0 = base + t;
            const std::size_t i1 = i0 ^ x;
            const int b = parity(i1 & z);
            const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
            __m256d t0 = _mm256_xor_pd(cmul_const(a1, w_re, w_im), sm.mask[b]);
            __m256d t1 = _mm256_xor_pd(cmul_const(a0, wc_re, wc_im), sm.mask[b]);
            t1 = _mm256_xor_pd(t1, negmask);
            _mm256_storeu_pd(p + 2 * i0, _mm256_fmadd_pd(cvec, a0, t0));
            _mm256_storeu_pd(p + 2 * i1, _mm256_fmadd_pd(cvec, a1, t1));
        }
    }
}

double pauli_expectation_avx2(const cplx* amps, std::size_t dim, std::uint64_t x,
                              std::uint64_t z, cplx unit) {
    if (dim < 4 || (x & 1)) {
        return scalar_table().pauli_expectation(amps, dim, x, z, unit);
    }
    const double* p = re_ptr(amps);
    const SignMasks sm = make_sign_masks((z & 1) != 0);
    if (x == 0) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < dim; i += 2) {
            const int b = parity(i & z);
            const __m256d a = _mm256_loadu_pd(p + 2 * i);
            const __m256d sq = _mm256_xor_pd(_mm256_mul_pd(a, a), sm.mask[b]);
            acc = _mm256_add_pd(acc, sq);
        }
        return unit.real() * hsum(acc);
    }
    const std::uint64_t pivot = x & (~x + 1);
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    for (std::size_t base = 0; base < dim; base += 2 * pivot) {
        for (std::size_t t = 0; t < pivot; t += 2) {
            const std::size_t i0 = base + t;
            const std::size_t i1 = i0 ^ x;
            const int b = parity(i1 & z);
            const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
            // conj(a0) * a1: real parts in acc_r lanes, imag in acc_i lanes.
            acc_r = _mm256_add_pd(acc_r, _mm256_xor_pd(_mm256_mul_pd(a0, a1), sm.mask[b]));
            const __m256d a1_sw = _mm256_permute_pd(a1, 0b0101);
            acc_i = _mm256_add_pd(acc_i, _mm256_xor_pd(_mm256_mul_pd(a0, a1_sw), sm.mask[b]));
        }
    }
    // Per complex: v_r = lane0 + lane1 of a0*a1; v_i = re0*im1 - im0*re1.
    const double vr = hsum(acc_r);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc_i);
    const double vi = (lanes[0] - lanes[1]) + (lanes[2] - lanes[3]);
    return 2.0 * (unit.real() * vr - unit.imag() * vi);
}

cplx pauli_bilinear_avx2(const cplx* bra, const cplx* ket, std::size_t dim,
                         std::uint64_t x, std::uint64_t z, cplx unit) {
    if (dim < 4 || (x & 1)) {
        return scalar_table().pauli_bilinear(bra, ket, dim, x, z, unit);
    }
    const double* pb = re_ptr(bra);
    const double* pk = re_ptr(ket);
    const SignMasks sm = make_sign_masks((z & 1) != 0);
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; i += 2) {
        const std::size_t j = i ^ x;
        const int b = parity(j & z);
        const __m256d a = _mm256_loadu_pd(pb + 2 * i);
        const __m256d k = _mm256_loadu_pd(pk + 2 * j);
        acc_r = _mm256_add_pd(acc_r, _mm256_xor_pd(_mm256_mul_pd(a, k), sm.mask[b]));
        const __m256d k_sw = _mm256_permute_pd(k, 0b0101);
        acc_i = _mm256_add_pd(acc_i, _mm256_xor_pd(_mm256_mul_pd(a, k_sw), sm.mask[b]));
    }
    const double vr = hsum(acc_r);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc_i);
    const double vi = (lanes[0] - lanes[1]) + (lanes[2] - lanes[3]);
    return unit * cplx(vr, vi);
}

double norm_sq_avx2(const cplx* amps, std::size_t dim) {
    if (dim < 4) return scalar_table().norm_sq(amps, dim);
    const double* p = re_ptr(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; i += 2) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(a, a, acc);
    }
    return hsum(acc);
}

cplx inner_avx2(const cplx* a, const cplx* b, std::size_t dim) {
    if (dim < 4) return scalar_table().inner(a, b, dim);
    const double* pa = re_ptr(a);
    const double* pb = re_ptr(b);
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_r = _mm256_fmadd_pd(va, vb, acc_r);
        acc_i = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_i);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc_i);
    return cplx(hsum(acc_r), (lanes[0] - lanes[1]) + (lanes[2] - lanes[3]));
}

void apply_1q_avx2(cplx* amps, std::size_t dim, std::uint64_t target_bit,
                   const cplx m[4]) {
    if (dim < 4 || target_bit < 2) {
        scalar_table().apply_1q(amps, dim, target_bit, m);
        return;
    }
    double* p = re_ptr(amps);
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < dim; base += 2 * target_bit) {
        for (std::size_t t = 0; t < target_bit; t += 2) {
            const std::size_t i0 = base + t;
            const std::size_t i1 = i0 | target_bit;
            const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
            const __m256d r0 =
                _mm256_add_pd(cmul_const(a0, m00r, m00i), cmul_const(a1, m01r, m01i));
            const __m256d r1 =
                _mm256_add_pd(cmul_const(a0, m10r, m10i), cmul_const(a1, m11r, m11i));
            _mm256_storeu_pd(p + 2 * i0, r0);
            _mm256_storeu_pd(p + 2 * i1, r1);
        }
    }
}

} // namespace

const KernelTable& avx2_table() {
    static const KernelTable table = {
        pauli_apply_avx2,    pauli_rotate_avx2, pauli_expectation_avx2,
        pauli_bilinear_avx2, norm_sq_avx2,      inner_avx2,
        apply_1q_avx2,
    };
    return table;
}

} // namespace gentlegrad::qcore::kernels

#endif // GENTLEGRAD_BUILD_AVX2
