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
#include "gentlegrad/tomography/shadow_tomography.hpp"

#include <cmath>
#include <stdexcept>

namespace gentlegrad::tomography {

std::uint64_t batch_allowance(int n_qubits, double eps, const TomographyConfig& cfg) {
    return static_cast<std::uint64_t>(std::ceil(cfg.kappa_r * n_qubits / (eps * eps)));
}

std::uint64_t batch_size(int num_observables, double eps, const TomographyConfig& cfg) {
    // kappa_0 * ceil(ln^2 M) * ceil(1/eps^2); the integer log factor keeps
    // M-sweep ratios at or below the ideal log^2 ratio after rounding.
    const double lg = std::log(std::max(num_observables, 2));
    const double log_factor = std::ceil(lg * lg);
    const double eps_factor = std::ceil(1.0 / (eps * eps));
    return static_cast<std::uint64_t>(cfg.kappa_0 * log_factor * eps_factor);
}

TomographyResult shadow_tomography(const StateVector& psi,
                                   const std::vector<PauliString>& observables, double eps,
                                   RngStream& rng, const TomographyConfig& cfg) {
    if (observables.empty()) throw std::invalid_argument("shadow_tomography: no observables");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("shadow_tomography: eps in (0,1)");
    const int n = psi.n();
    const int m_obs = static_cast<int>(observables.size());

    ThresholdConfig tc;
    tc.eps = eps;
    tc.num_observables = m_obs;
    tc.m0 = batch_size(m_obs, eps, cfg);
    tc.max_batches = batch_allowance(n, eps, cfg);
    tc.kappa_refine = cfg.kappa_refine;
    ThresholdSession session(tc);

    const double eta = (cfg.eta > 0.0) ? cfg.eta : eps / 4.0;
    OnlineLearner learner(n, eta);

    TomographyResult result;
    result.estimates.reserve(observables.size());
    for (const PauliString& e : observables) {
        if (e.n != n) throw std::invalid_argument("shadow_tomography: observable width mismatch");
        const double a = learner.predict(e);
        const auto outcome = session.check(e, a, psi, rng, result.ledger);
        if (outcome.pass) {
            result.estimates.push_back(a);
        } else {
            result.estimates.push_back(outcome.refined);
            learner.update(e, outcome.refined);
        }
    }
    result.ledger.batches_used = session.batches_opened();
    result.ledger.copies_total = tc.max_batches * tc.m0; // requested allowance R * m0
    result.ledger.learner_updates = learner.mistakes();
    return result;
}

} // namespace gentlegrad::tomography
