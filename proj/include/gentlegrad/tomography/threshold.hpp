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

#include <optional>
#include <stdexcept>

#include "gentlegrad/ledger.hpp"
#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::tomography {

using qcore::PauliString;
using qcore::RngStream;
using qcore::StateVector;

/// Raised when every batch allowance is spent; carries the ledger snapshot.
struct BatchExhausted : std::runtime_error {
    explicit BatchExhausted(CopyLedger snapshot)
        : std::runtime_error("threshold search: batch allowance exhausted"), ledger(snapshot) {}
    CopyLedger ledger;
};

struct ThresholdConfig {
    double eps = 0.1;
    int num_observables = 1;  // M, sets the refinement budget
    std::uint64_t m0 = 0;     // copies per batch
    std::uint64_t max_batches = 0; // R
    double kappa_refine = 40.0;
};

/// Statistical emulation of online threshold search. A check estimates <E>
/// on the true state with one batch worth of per-copy shots and passes when
/// the guess agrees within eps/2; otherwise it flags, refines the estimate
/// on the flagged batch (kappa_refine * ln(M)/eps^2 extra shots) and
/// discards that batch. Passing consumes no batch.
class ThresholdSession {
  public:
    explicit ThresholdSession(ThresholdConfig cfg);

    struct Outcome {
        bool pass;
        double refined; // only meaningful when !pass
    };

    /// Checks guess `a` for observable E against the (simulated) true state.
    /// Throws BatchExhausted when a flag would need a batch beyond R.
    Outcome check(const PauliString& e, double a, const StateVector& true_state, RngStream& rng,
                  CopyLedger& ledger);

    std::uint64_t batches_opened() const { return flags_ + 1; }
    std::uint64_t flags() const { return flags_; }
    std::uint64_t refine_shots() const { return refine_shots_; }
    const ThresholdConfig& config() const { return cfg_; }

  private:
    ThresholdConfig cfg_;
    std::uint64_t flags_ = 0;
    std::uint64_t refine_shots_;
};

} // namespace gentlegrad::tomography
