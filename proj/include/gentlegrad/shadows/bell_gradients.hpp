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
#include "gentlegrad/models/model.hpp"
#include "gentlegrad/qcore/bell.hpp"

namespace gentlegrad::shadows {

using models::GradientReport;
using qcore::PauliString;
using qcore::RngStream;
using qcore::StateVector;

struct BellEstimate {
    PauliString pauli;
    double squared_mean; // estimator of tr(P sigma)^2, in [-1, 1] before truncation
    std::uint64_t samples;

    double magnitude() const; // sqrt(max(squared_mean, 0))
};

struct BellSchemeConfig {
    double kappa_b = 4.0;    // Bell pairs: kappa_b ceil(ln M) * ceil(1/eps^4)
    double kappa_sign = 8.0; // sign shots per candidate: kappa ln(M)/eps^2
};

std::uint64_t bell_pair_count(int num_paulis, double eps, const BellSchemeConfig& cfg = {});
std::uint64_t sign_shot_count(int num_paulis, double eps, const BellSchemeConfig& cfg = {});

/// Two-copy Bell magnitude estimation: one set of transversal Bell samples
/// of sigma (x) sigma serves every Pauli word at once, with
/// E[prod_q f(P_q, outcome_q)] = tr(P sigma)^2.
std::vector<BellEstimate> pauli_magnitudes_bell(const StateVector& sigma,
                                                const std::vector<PauliString>& paulis,
                                                double eps, RngStream& rng,
                                                CopyLedger* ledger = nullptr,
                                                const BellSchemeConfig& cfg = {});

/// Majority-vote signs from single-copy measurements of each candidate.
std::vector<int> pauli_signs_vote(const StateVector& sigma,
                                  const std::vector<PauliString>& candidates, double eps,
                                  int num_paulis_total, RngStream& rng,
                                  CopyLedger* ledger = nullptr,
                                  const BellSchemeConfig& cfg = {});

/// Special-case gradient scheme: components 2 tr(V rho V^dag P_k) from Bell
/// magnitudes plus sign votes; sub-steps run at eps/2 and magnitudes below
/// eps/4 are reported as zero.
GradientReport special_case_gradient(const qcore::GateList& v, const StateVector& rho_input,
                                     const std::vector<PauliString>& paulis, double eps,
                                     RngStream& rng, const BellSchemeConfig& cfg = {});

} // namespace gentlegrad::shadows
