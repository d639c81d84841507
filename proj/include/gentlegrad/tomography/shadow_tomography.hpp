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
#include "gentlegrad/tomography/learner.hpp"
#include "gentlegrad/tomography/threshold.hpp"

namespace gentlegrad::tomography {

/// Tunable constants; the asymptotic forms fix only the shapes, these pin
/// the desk-scale values.
struct TomographyConfig {
    double kappa_r = 8.0;       // batches R = ceil(kappa_r * n / eps^2)
    double kappa_0 = 16.0;      // batch size m0 = ceil(kappa_0 * ln^2(M) / eps^2)
    double kappa_refine = 40.0; // refinement shots per flag: kappa * ln(M)/eps^2
    double eta = 0.0;           // MMW learning rate; 0 selects eps/4
};

std::uint64_t batch_allowance(int n_qubits, double eps, const TomographyConfig& cfg);
std::uint64_t batch_size(int num_observables, double eps, const TomographyConfig& cfg);

struct TomographyResult {
    std::vector<double> estimates;
    CopyLedger ledger;
};

/// Online gentle shadow tomography: predicts each Tr(E_k rho) with the
/// hypothesis state and spends copies only on threshold flags. All returned
/// estimates satisfy |b_k - <psi|E_k|psi>| <= eps with high probability.
TomographyResult shadow_tomography(const StateVector& psi,
                                   const std::vector<PauliString>& observables, double eps,
                                   RngStream& rng, const TomographyConfig& cfg = {});

} // namespace gentlegrad::tomography
