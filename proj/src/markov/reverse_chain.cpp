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
#include "gentlegrad/markov/reverse_chain.hpp"

#include <stdexcept>

namespace gentlegrad::markov {

ReverseModeResult reverse_mode_chain(const std::vector<ChainStage>& stages,
                                     const std::vector<double>& x) {
    ReverseModeResult result;
    const std::size_t n = stages.size();

    // Forward pass: store every intermediate z_i.
    std::vector<std::vector<double>> z(n + 1);
    z[0] = x;
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(z[i].size()) != stages[i].in_dim)
            throw std::invalid_argument("reverse_mode_chain: stage input dimension mismatch");
        z[i + 1] = stages[i].eval(z[i]);
        if (static_cast<int>(z[i + 1].size()) != stages[i].out_dim)
            throw std::invalid_argument("reverse_mode_chain: stage output dimension mismatch");
        ++result.time_forward;
    }
    result.value = z[n];
    result.memory_forward = n + 1; // stored value registers

    // Backward pass: lambda_n = 1, pulled through each local vjp.
    std::vector<double> lambda(z[n].size(), 1.0);
    std::uint64_t time_backward = 0;
    for (std::size_t i = n; i-- > 0;) {
        lambda = stages[i].vjp(z[i], lambda);
        if (static_cast<int>(lambda.size()) != stages[i].in_dim)
            throw std::invalid_argument("reverse_mode_chain: vjp dimension mismatch");
        time_backward += 2; // derivative evaluation + application
    }
    result.gradient = lambda;
    result.time_total = result.time_forward + time_backward;
    result.memory_total = result.memory_forward + (n + 1); // plus the cotangent register
    return result;
}

} // namespace gentlegrad::markov
