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

#include <string>
#include <vector>

#include "gentlegrad/shadows/fidelity_shadows.hpp"

namespace gentlegrad::shadows {

struct CandidateSet {
    std::vector<qcore::GateList> circuits; // one representative per state
    std::vector<StateVector> states;
};

/// Enumerates all circuits of at most max_gates gates over the named gate
/// set ("H", "S", "CNOT", ...), deduplicating by prepared state (overlap
/// collision 1e-8). Throws when the raw sequence count exceeds the cap.
CandidateSet enumerate_circuits(const std::vector<std::string>& gate_set, int max_gates, int n,
                                std::size_t cap = 1000000);

struct IdentifyResult {
    qcore::GateList circuit;
    StateVector state;
    double estimated_fidelity = 0.0;
    std::size_t num_candidates = 0;
    std::uint64_t shadow_shots = 0;
    CopyLedger ledger;
};

/// Shadow-based circuit identification: enumerate candidates, estimate all
/// fidelities with Clifford shadows, return the argmax candidate.
IdentifyResult identify_circuit(const std::vector<std::string>& gate_set, int max_gates, int n,
                                const StateVector& psi, double eps, RngStream& rng,
                                const ShadowConfig& cfg = {});

} // namespace gentlegrad::shadows
