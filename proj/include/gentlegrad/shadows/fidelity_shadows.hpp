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

#include <vector>

#include "gentlegrad/ledger.hpp"
#include "gentlegrad/shadows/clifford.hpp"
#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::shadows {

using qcore::StateVector;

struct ShadowConfig {
    double kappa_s = 24.0;  // shots = ceil(kappa_s * ln(K) / eps^2)
    double delta = 0.05;    // sets the median-of-means group count
};

std::uint64_t shadow_count(int num_candidates, double eps, const ShadowConfig& cfg = {});

/// Clifford classical shadows fidelity estimation: `shots` snapshots
/// (random Clifford + computational sample) feed a median-of-means
/// estimator of |<phi_i|psi>|^2 for every candidate simultaneously.
std::vector<double> clifford_shadow_fidelities(const StateVector& psi,
                                               const std::vector<StateVector>& candidates,
                                               std::uint64_t shots, RngStream& rng,
                                               CopyLedger* ledger = nullptr,
                                               const ShadowConfig& cfg = {});

/// Single-snapshot estimator (2^n + 1)|<b|C|phi>|^2 - 1, exposed for the
/// unbiasedness tests.
std::vector<double> shadow_snapshot_fidelities(const SampledClifford& clifford,
                                               std::uint64_t outcome,
                                               const std::vector<StateVector>& candidates);

} // namespace gentlegrad::shadows
