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
#include "gentlegrad/estimators/shots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gentlegrad::estimators {

namespace {
constexpr double kQuarterPi = 0.78539816339744830962;
}

std::uint64_t circuit_gate_count(const LayeredModel& m) {
    std::uint64_t gates = 0;
    for (const auto& l : m.layers()) gates += l.fixed.size() + 1;
    return gates;
}

double shot_estimate(const LayeredModel& m, const StateVector& input, std::uint64_t shots,
                     RngStream& rng, CopyLedger* ledger) {
    if (shots == 0) throw std::invalid_argument("shot_estimate: need at least one shot");
    const double value = evaluate_model(m, input);
    const double p = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
    const std::uint64_t plus = rng.binomial(shots, p);
    if (ledger) {
        ledger->destructive_shots += shots;
        ledger->shots_estimate += shots;
        ledger->circuit_executions += shots;
        ledger->gate_applications += shots * circuit_gate_count(m);
    }
    return (2.0 * double(plus) - double(shots)) / double(shots);
}

std::uint64_t paramshift_shots_per_term(int M, double eps, double delta) {
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
        throw std::invalid_argument("paramshift_shots_per_term: eps, delta must be in (0,1)");
    // Hoeffding for +-1 shot means at tolerance eps/2 each, union bound over
    // the 2M shifted estimates: P(fail) <= 2M * 2 exp(-m eps^2 / 8) <= delta.
    return static_cast<std::uint64_t>(
        std::ceil(8.0 * std::log(4.0 * std::max(M, 1) / delta) / (eps * eps)));
}

GradientReport paramshift_shot_gradient(const LayeredModel& m, const StateVector& input,
                                        double eps, double delta, RngStream& rng) {
    const int M = m.num_layers();
    const std::uint64_t shots = paramshift_shots_per_term(M, eps, delta);

    GradientReport report;
    report.method = "paramshift-shots";
    report.epsilon = eps;
    report.values.assign(M, 0.0);

    LayeredModel probe = m;
    for (int k = 0; k < M; ++k) {
        const double theta_k = m.theta()[k];
        probe.theta()[k] = theta_k + kQuarterPi;
        const double plus = shot_estimate(probe, input, shots, rng, &report.ledger);
        probe.theta()[k] = theta_k - kQuarterPi;
        const double minus = shot_estimate(probe, input, shots, rng, &report.ledger);
        probe.theta()[k] = theta_k;
        report.values[k] = plus - minus;
    }
    return report;
}

} // namespace gentlegrad::estimators
