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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gentlegrad/qcore/kernels.hpp"
#include "gentlegrad/qcore/rng.hpp"

// Scalar/AVX2 equivalence. Every SIMD kernel must agree with the scalar
// reference on random inputs across the mask shapes that select different
// code paths (diagonal words, bit-0 pivots, small dimensions).

using namespace gentlegrad::qcore;
using kernels::cplx;

namespace {

std::vector<cplx> random_amps(std::size_t dim, RngStream& rng) {
    std::vector<cplx> v(dim);
    for (auto& a : v) a = cplx(rng.normal(), rng.normal());
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct MaskCase {
    int n;
    std::uint64_t x, z;
    cplx unit;
};

std::vector<MaskCase> mask_cases(RngStream& rng) {
    std::vector<MaskCase> cases = {
        {1, 0b1, 0b0, {1, 0}},   // X, smallest dim
        {1, 0b0, 0b1, {1, 0}},   // Z diagonal
        {3, 0b001, 0b000, {1, 0}}, // pivot at bit 0
        {3, 0b100, 0b001, {1, 0}}, // pivot high, z low
        {3, 0b000, 0b101, {-1, 0}},
        {4, 0b1010, 0b0110, {0, 1}},
        {5, 0b10000, 0b10001, {0, -1}},
    };
    const cplx units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int t = 0; t < 24; ++t) {
        const int n = 1 + int(rng.below(6));
        const std::uint64_t lim = (1ull << n) - 1;
        cases.push_back({n, rng.next_u64() & lim, rng.next_u64() & lim,
                         units[rng.below(4)]});
    }
    return cases;
}

} // namespace

TEST_CASE("backend dispatch") {
    CHECK(kernels::force_backend(kernels::Backend::Scalar));
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    if (kernels::avx2_available()) {
        CHECK(kernels::force_backend(kernels::Backend::Avx2));
        CHECK(kernels::active_backend() == kernels::Backend::Avx2);
    }
    CHECK(kernels::backend_name(kernels::active_backend()).size() > 0);
}

TEST_CASE("scalar and avx2 kernels agree") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 unavailable; equivalence suite skipped");
        return;
    }
    const auto& sc = kernels::scalar_table();
    const auto& vx = kernels::avx2_table();
    RngStream rng(31);

    for (const auto& mc : mask_cases(rng)) {
        const std::size_t dim = std::size_t(1) << mc.n;
        CAPTURE(mc.n);
        CAPTURE(mc.x);
        CAPTURE(mc.z);

        {
            auto a = random_amps(dim, rng);
            auto b = a;
            sc.pauli_apply(a.data(), dim, mc.x, mc.z, mc.unit);
            vx.pauli_apply(b.data(), dim, mc.x, mc.z, mc.unit);
            CHECK(max_diff(a, b) < 1e-12);
        }
        {
            auto a = random_amps(dim, rng);
            auto b = a;
            const double th = rng.uniform(-3.0, 3.0);
            sc.pauli_rotate(a.data(), dim, mc.x, mc.z, mc.unit, std::cos(th), std::sin(th));
            vx.pauli_rotate(b.data(), dim, mc.x, mc.z, mc.unit, std::cos(th), std::sin(th));
            CHECK(max_diff(a, b) < 1e-12);
        }
        {
            const auto a = random_amps(dim, rng);
            const double es = sc.pauli_expectation(a.data(), dim, mc.x, mc.z, mc.unit);
            const double ev = vx.pauli_expectation(a.data(), dim, mc.x, mc.z, mc.unit);
            CHECK(es == doctest::Approx(ev).epsilon(1e-12));
        }
        {
            const auto a = random_amps(dim, rng);
            const auto b = random_amps(dim, rng);
            const cplx bs = sc.pauli_bilinear(a.data(), b.data(), dim, mc.x, mc.z, mc.unit);
            const cplx bv = vx.pauli_bilinear(a.data(), b.data(), dim, mc.x, mc.z, mc.unit);
            CHECK(std::abs(bs - bv) < 1e-11);
        }
    }
}

TEST_CASE("scalar and avx2 reductions and 1q gates agree") {
    if (!kernels::avx2_available()) return;
    const auto& sc = kernels::scalar_table();
    const auto& vx = kernels::avx2_table();
    RngStream rng(32);

    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = std::size_t(1) << n;
        const auto a = random_amps(dim, rng);
        const auto b = random_amps(dim, rng);
        CHECK(sc.norm_sq(a.data(), dim) == doctest::Approx(vx.norm_sq(a.data(), dim)).epsilon(1e-13));
        CHECK(std::abs(sc.inner(a.data(), b.data(), dim) - vx.inner(a.data(), b.data(), dim)) <
              1e-11);

        for (std::uint64_t bit = 1; bit < dim; bit <<= 1) {
            const cplx m[4] = {cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal()),
                               cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal())};
            auto u = a;
            auto v = a;
            sc.apply_1q(u.data(), dim, bit, m);
            vx.apply_1q(v.data(), dim, bit, m);
            CHECK(max_diff(u, v) < 1e-12);
        }
    }
}
