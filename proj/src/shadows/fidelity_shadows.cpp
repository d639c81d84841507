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
#include "gentlegrad/shadows/fidelity_shadows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gentlegrad::shadows {

std::uint64_t shadow_count(int num_candidates, double eps, const ShadowConfig& cfg) {
    return static_cast<std::uint64_t>(
        std::ceil(cfg.kappa_s * std::log(std::max(num_candidates, 2)) / (eps * eps)));
}

std::vector<double> shadow_snapshot_fidelities(const SampledClifford& clifford,
                                               std::uint64_t outcome,
                                               const std::vector<StateVector>& candidates) {
    if (candidates.empty()) return {};
    const int n = candidates.front().n();
    // <b|C|phi> = <C^dag b|phi>: rotate the outcome basis state back once.
    StateVector back = StateVector::basis(n, outcome);
    qcore::apply_gate_list(back, qcore::inverted(clifford.gates));
    const double dplus1 = double((std::uint64_t(1) << n) + 1);
    std::vector<double> out;
    out.reserve(candidates.size());
    for (const auto& phi : candidates)
        out.push_back(dplus1 * std::norm(qcore::inner(back, phi)) - 1.0);
    return out;
}

std::vector<double> clifford_shadow_fidelities(const StateVector& psi,
                                               const std::vector<StateVector>& candidates,
                                               std::uint64_t shots, RngStream& rng,
                                               CopyLedger* ledger, const ShadowConfig& cfg) {
    if (candidates.empty())
        throw std::invalid_argument("clifford_shadow_fidelities: no candidates");
    for (const auto& c : candidates)
        if (c.n() != psi.n())
            throw std::invalid_argument("clifford_shadow_fidelities: width mismatch");
    if (shots == 0) throw std::invalid_argument("clifford_shadow_fidelities: zero shots");

    const std::size_t k_cand = candidates.size();
    const std::uint64_t groups = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(2.0 * std::log(2.0 * double(k_cand) / cfg.delta))));
    const std::uint64_t per_group = std::max<std::uint64_t>(1, shots / groups);

    // group_sums[g][i] accumulates snapshot estimates for candidate i.
    std::vector<std::vector<double>> group_sums(groups, std::vector<double>(k_cand, 0.0));
    for (std::uint64_t g = 0; g < groups; ++g) {
        for (std::uint64_t s = 0; s < per_group; ++s) {
            const auto clifford = sample_random_clifford(psi.n(), rng);
            StateVector rotated = psi;
            qcore::apply_gate_list(rotated, clifford.gates);
            const std::uint64_t outcome = qcore::BasisSampler(rotated).sample(rng);
            const auto snap = shadow_snapshot_fidelities(clifford, outcome, candidates);
            for (std::size_t i = 0; i < k_cand; ++i) group_sums[g][i] += snap[i];
        }
    }
    if (ledger) {
        const std::uint64_t used = groups * per_group;
        ledger->copies_total += used;
        ledger->destructive_shots += used;
        ledger->shots_estimate += used;
    }

    std::vector<double> fidelities(k_cand, 0.0);
    std::vector<double> means(groups);
    for (std::size_t i = 0; i < k_cand; ++i) {
        for (std::uint64_t g = 0; g < groups; ++g) means[g] = group_sums[g][i] / double(per_group);
        std::nth_element(means.begin(), means.begin() + groups / 2, means.end());
        double median = means[groups / 2];
        if (groups % 2 == 0) {
            const double upper = median;
            std::nth_element(means.begin(), means.begin() + (groups / 2 - 1), means.end());
            median = 0.5 * (means[groups / 2 - 1] + upper);
        }
        fidelities[i] = median;
    }
    return fidelities;
}

} // namespace gentlegrad::shadows
