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

#include <cstdint>
#include <functional>
#include <vector>

namespace gentlegrad::markov {

/// One elementary map of a composition chain, with its own local
/// vector-Jacobian product (input z, output cotangent -> input cotangent).
struct ChainStage {
    int in_dim = 1;
    int out_dim = 1;
    std::function<std::vector<double>(const std::vector<double>&)> eval;
    std::function<std::vector<double>(const std::vector<double>&, const std::vector<double>&)>
        vjp;
};

struct ReverseModeResult {
    std::vector<double> value;    // final stage output
    std::vector<double> gradient; // d(sum of outputs)/dx
    // Register-model counters: TIME counts elementary evaluations (a vjp
    // costs two: derivative evaluation plus application); MEMORY counts
    // value registers alive (stored intermediates, plus the cotangent
    // register during the backward pass).
    std::uint64_t time_forward = 0;
    std::uint64_t time_total = 0;
    std::uint64_t memory_forward = 0;
    std::uint64_t memory_total = 0;
};

/// Reverse-mode differentiation of a stage composition: forward pass caches
/// intermediates, backward pass pulls the cotangent through each vjp.
/// time_total <= 3x time_forward and memory_total <= 2x memory_forward.
ReverseModeResult reverse_mode_chain(const std::vector<ChainStage>& stages,
                                     const std::vector<double>& x);

} // namespace gentlegrad::markov
