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

#include "gentlegrad/ledger.hpp"
#include "gentlegrad/models/model.hpp"

namespace gentlegrad::estimators {

using models::GradientReport;
using models::LayeredModel;
using qcore::RngStream;
using qcore::StateVector;

struct ShotBudget {
    std::uint64_t shots_per_term = 0;
    std::uint64_t total_shots = 0;
    double epsilon = 0.0;
    double delta = 0.0;
};

/// Total elementary gates in one circuit execution of the model.
std::uint64_t circuit_gate_count(const LayeredModel& m);

/// Mean of `shots` +-1 measurement outcomes of the model observable.
/// Standard error is at most 1/sqrt(shots).
double shot_estimate(const LayeredModel& m, const StateVector& input, std::uint64_t shots,
                     RngStream& rng, CopyLedger* ledger = nullptr);

/// Per-term shot count ceil(8 ln(4M/delta) / eps^2): a Hoeffding budget with
/// a union bound over the 2M shifted-circuit estimates.
std::uint64_t paramshift_shots_per_term(int M, double eps, double delta);

/// Naive sampled parameter-shift gradient: two shifted-circuit estimates per
/// component. The ledger records protocol-level costs (2M*shots circuit
/// executions, each costing one full circuit).
GradientReport paramshift_shot_gradient(const LayeredModel& m, const StateVector& input,
                                        double eps, double delta, RngStream& rng);

} // namespace gentlegrad::estimators
