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

#include <cmath>
#include <cstdint>

namespace gentlegrad::qcore {

/// Counter-based random stream. Draws are a pure function of
/// (seed, stream_id, counter), so identical (seed, stream_id) always
/// reproduce the same sequence and sibling streams are independent of
/// the draw order in other streams.
class RngStream {
  public:
    RngStream() = default;
    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    /// Child stream with the same seed; used to fan out shot batches.
    RngStream derive(std::uint64_t sub_stream) const {
        return RngStream(seed_, mix64(stream_ ^ (sub_stream * 0x9E3779B97F4A7C15ull)));
    }

    std::uint64_t next_u64() {
        std::uint64_t h = seed_ + 0x9E3779B97F4A7C15ull * ++counter_;
        h ^= mix64(stream_ + 0xBF58476D1CE4E5B9ull);
        return mix64(h);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Rademacher variable, +1 or -1 with equal probability.
    int rademacher() { return (next_u64() >> 63) ? 1 : -1; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64.
        return next_u64() % n;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(6.283185307179586477 * u2);
        have_cached_ = true;
        return r * std::cos(6.283185307179586477 * u2);
    }

    /// Sum of n Bernoulli(p) draws. Exact sampling; n stays desk-scale.
    std::uint64_t binomial(std::uint64_t n, double p) {
        std::uint64_t k = 0;
        for (std::uint64_t i = 0; i < n; ++i) k += bernoulli(p);
        return k;
    }

  private:
    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace gentlegrad::qcore
