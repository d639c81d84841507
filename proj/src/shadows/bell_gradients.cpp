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
#include "gentlegrad/shadows/bell_gradients.hpp"

#include <cmath>
#include <stdexcept>

#include "gentlegrad/qcore/gates.hpp"

namespace gentlegrad::shadows {

double BellEstimate::magnitude() const { return std::sqrt(std::max(squared_mean, 0.0)); }

std::uint64_t bell_pair_count(int num_paulis, double eps, const BellSchemeConfig& cfg) {
    const double lg = std::ceil(cfg.kappa_b * std::log(std::max(num_paulis, 2)));
    return static_cast<std::uint64_t>(lg * std::ceil(1.0 / (eps * eps * eps * eps)));
}

std::uint64_t sign_shot_count(int num_paulis, double eps, const BellSchemeConfig& cfg) {
    return static_cast<std::uint64_t>(
        std::ceil(cfg.kappa_sign * std::log(std::max(num_paulis, 2)) / (eps * eps)));
}

std::vector<BellEstimate> pauli_magnitudes_bell(const StateVector& sigma,
                                                const std::vector<PauliString>& paulis,
                                                double eps, RngStream& rng, CopyLedger* ledger,
                                                const BellSchemeConfig& cfg) {
    const int n = sigma.n();
    for (const auto& p : paulis)
        if (p.n != n) throw std::invalid_argument("pauli_magnitudes_bell: word width mismatch");
    const std::uint64_t samples = bell_pair_count(static_cast<int>(paulis.size()), eps, cfg);

    // Per-Pauli, per-qubit rows of the Bell eigenvalue table.
    std::vector<std::vector<const std::array<int, 4>*>> rows(paulis.size());
    for (std::size_t i = 0; i < paulis.size(); ++i) {
        rows[i].resize(n);
        for (int q = 0; q < n; ++q) {
            switch (paulis[i].letter(q)) {
                case 'I': rows[i][q] = &qcore::kBellPauliEigen[0]; break;
                case 'X': rows[i][q] = &qcore::kBellPauliEigen[1]; break;
                case 'Y': rows[i][q] = &qcore::kBellPauliEigen[2]; break;
                default: rows[i][q] = &qcore::kBellPauliEigen[3]; break;
            }
        }
    }

    std::vector<double> sums(paulis.size(), 0.0);
    qcore::BellSampler sampler(sigma, sigma);
    if (n <= 8) {
        // Precompute chi per joint outcome: 4^n entries per word.
        const std::size_t combos = std::size_t(1) << (2 * n);
        std::vector<std::vector<std::int8_t>> chi_table(paulis.size());
        for (std::size_t i = 0; i < paulis.size(); ++i) {
            chi_table[i].resize(combos);
            for (std::size_t c = 0; c < combos; ++c) {
                int chi = 1;
                for (int q = 0; q < n; ++q) chi *= (*rows[i][q])[(c >> (2 * q)) & 3];
                chi_table[i][c] = static_cast<std::int8_t>(chi);
            }
        }
        for (std::uint64_t s = 0; s < samples; ++s) {
            const auto outcome = sampler.sample(rng);
            std::size_t key = 0;
            for (int q = 0; q < n; ++q) key |= std::size_t(outcome[q]) << (2 * q);
            for (std::size_t i = 0; i < paulis.size(); ++i) sums[i] += chi_table[i][key];
        }
    } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
            const auto outcome = sampler.sample(rng);
            for (std::size_t i = 0; i < paulis.size(); ++i) {
                int chi = 1;
                for (int q = 0; q < n; ++q) chi *= (*rows[i][q])[outcome[q]];
                sums[i] += chi;
            }
        }
    }

    if (ledger) {
        ledger->copies_total += 2 * samples;
        ledger->destructive_shots += samples;
        ledger->shots_magnitude += samples;
    }
    std::vector<BellEstimate> out;
    out.reserve(paulis.size());
    for (std::size_t i = 0; i < paulis.size(); ++i)
        out.push_back({paulis[i], sums[i] / double(samples), samples});
    return out;
}

std::vector<int> pauli_signs_vote(const StateVector& sigma,
                                  const std::vector<PauliString>& candidates, double eps,
                                  int num_paulis_total, RngStream& rng, CopyLedger* ledger,
                                  const BellSchemeConfig& cfg) {
    std::vector<int> signs;
    signs.reserve(candidates.size());
    if (candidates.empty()) return signs;
    const std::uint64_t shots = sign_shot_count(num_paulis_total, eps, cfg);
    for (const auto& p : candidates) {
        std::int64_t tally = 0;
        for (std::uint64_t s = 0; s < shots; ++s) tally += qcore::sample_outcome(sigma, p, rng);
        signs.push_back(tally >= 0 ? +1 : -1);
        if (ledger) {
            ledger->copies_total += shots;
            ledger->destructive_shots += shots;
            ledger->shots_sign += shots;
        }
    }
    return signs;
}

GradientReport special_case_gradient(const qcore::GateList& v, const StateVector& rho_input,
                                     const std::vector<PauliString>& paulis, double eps,
                                     RngStream& rng, const BellSchemeConfig& cfg) {
    GradientReport report;
    report.method = "pauli-gentle";
    report.epsilon = eps;
    report.values.assign(paulis.size(), 0.0);

    StateVector sigma = rho_input;
    qcore::apply_gate_list(sigma, v);

    const double sub_eps = 0.5 * eps;
    const auto magnitudes = pauli_magnitudes_bell(sigma, paulis, sub_eps, rng, &report.ledger, cfg);

    std::vector<PauliString> candidates;
    std::vector<std::size_t> candidate_index;
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        if (magnitudes[i].magnitude() >= 0.25 * eps) {
            candidates.push_back(paulis[i]);
            candidate_index.push_back(i);
        }
    }
    const auto signs = pauli_signs_vote(sigma, candidates, sub_eps,
                                        static_cast<int>(paulis.size()), rng, &report.ledger, cfg);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const std::size_t i = candidate_index[c];
        report.values[i] = 2.0 * signs[c] * magnitudes[i].magnitude();
    }
    return report;
}

} // namespace gentlegrad::shadows
