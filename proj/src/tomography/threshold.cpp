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
#include "gentlegrad/tomography/threshold.hpp"

#include <algorithm>
#include <cmath>

namespace gentlegrad::tomography {

namespace {

double sampled_mean(double value, std::uint64_t shots, RngStream& rng) {
    const double p = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
    const std::uint64_t plus = rng.binomial(shots, p);
    return (2.0 * double(plus) - double(shots)) / double(shots);
}

} // namespace

ThresholdSession::ThresholdSession(ThresholdConfig cfg) : cfg_(cfg) {
    if (cfg_.m0 == 0 || cfg_.max_batches == 0)
        throw std::invalid_argument("ThresholdSession: m0 and max_batches must be positive");
    if (!(cfg_.eps > 0 && cfg_.eps < 1))
        throw std::invalid_argument("ThresholdSession: eps must be in (0,1)");
    refine_shots_ = static_cast<std::uint64_t>(std::ceil(
        cfg_.kappa_refine * std::log(std::max(cfg_.num_observables, 2)) / (cfg_.eps * cfg_.eps)));
}

ThresholdSession::Outcome ThresholdSession::check(const PauliString& e, double a,
                                                  const StateVector& true_state, RngStream& rng,
                                                  CopyLedger& ledger) {
    if (batches_opened() > cfg_.max_batches) throw BatchExhausted(ledger);

    const double truth = qcore::expectation(true_state, e);
    const double estimate = sampled_mean(truth, cfg_.m0, rng);
    ledger.destructive_shots += cfg_.m0;
    ledger.shots_threshold += cfg_.m0;

    if (std::abs(a - estimate) <= 0.5 * cfg_.eps) return {true, 0.0};

    // Flag: refine on the flagged batch before discarding it. A fresh batch
    // is only needed (and charged) at the next check.
    const double refined = sampled_mean(truth, refine_shots_, rng);
    ledger.destructive_shots += refine_shots_;
    ledger.shots_refine += refine_shots_;
    ++flags_;
    return {false, refined};
}

} // namespace gentlegrad::tomography
