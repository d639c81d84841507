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

namespace gentlegrad {

/// Resource accounting shared by every estimator. Copies, batches and shots
/// follow the protocol-level bookkeeping; gate_applications counts elementary
/// operations applied to simulated quantum registers (one per batch
/// representative, never per identical copy). The phase counters decompose
/// destructive_shots and must sum to it exactly.
struct CopyLedger {
    std::uint64_t copies_total = 0;
    std::uint64_t batches_used = 0;
    std::uint64_t gate_applications = 0;
    std::uint64_t destructive_shots = 0;
    std::uint64_t learner_updates = 0;
    std::uint64_t circuit_executions = 0;

    // Phase breakdown of destructive_shots.
    std::uint64_t shots_threshold = 0;
    std::uint64_t shots_refine = 0;
    std::uint64_t shots_magnitude = 0;
    std::uint64_t shots_sign = 0;
    std::uint64_t shots_estimate = 0;

    bool shots_conserved() const {
        return shots_threshold + shots_refine + shots_magnitude + shots_sign + shots_estimate ==
               destructive_shots;
    }
};

} // namespace gentlegrad
