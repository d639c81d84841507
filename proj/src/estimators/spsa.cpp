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
#include "gentlegrad/estimators/spsa.hpp"

#include <cmath>
#include <stdexcept>

namespace gentlegrad::estimators {

namespace {

std::vector<int> rademacher_direction(std::size_t m, RngStream& rng) {
    std::vector<int> delta(m);
    for (auto& d : delta) d = rng.rademacher();
    return delta;
}

} // namespace

GradientReport spsa_gradient(const ScalarFn& f, const std::vector<double>& theta, double c,
                             std::uint64_t shots, std::uint64_t samples, RngStream& rng) {
    if (c <= 0.0) throw std::invalid_argument("spsa_gradient: step size c must be positive");
    if (samples == 0) throw std::invalid_argument("spsa_gradient: need at least one sample");
    const std::size_t m = theta.size();

    GradientReport report;
    report.method = "spsa";
    report.values.assign(m, 0.0);

    std::vector<double> shifted(m);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto delta = rademacher_direction(m, rng);
        for (std::size_t j = 0; j < m; ++j) shifted[j] = theta[j] + c * delta[j];
        double fp = f(shifted);
        for (std::size_t j = 0; j < m; ++j) shifted[j] = theta[j] - c * delta[j];
        double fm = f(shifted);
        if (shots > 0) {
            // Measurement-noise model for plain functions: the shot-mean of
            // a +-1 observable has variance (1 - F^2)/shots.
            fp += rng.normal() * std::sqrt(std::max(0.0, 1.0 - fp * fp) / double(shots));
            fm += rng.normal() * std::sqrt(std::max(0.0, 1.0 - fm * fm) / double(shots));
            report.ledger.destructive_shots += 2 * shots;
            report.ledger.shots_estimate += 2 * shots;
        }
        report.ledger.circuit_executions += 2;
        const double numerator = (fp - fm) / (2.0 * c);
        for (std::size_t j = 0; j < m; ++j) report.values[j] += numerator / double(delta[j]);
    }
    for (auto& v : report.values) v /= double(samples);
    return report;
}

GradientReport spsa_gradient(const LayeredModel& m, const StateVector& input, double c,
                             std::uint64_t shots, std::uint64_t samples, RngStream& rng) {
    LayeredModel probe = m;
    CopyLedger shot_ledger;
    ScalarFn f = [&](const std::vector<double>& theta) {
        probe.theta() = theta;
        if (shots == 0) return evaluate_model(probe, input);
        return shot_estimate(probe, input, shots, rng, &shot_ledger);
    };
    GradientReport report = spsa_gradient(f, m.theta(), c, 0, samples, rng);
    report.ledger = shot_ledger;
    report.ledger.circuit_executions = 2 * samples * std::max<std::uint64_t>(shots, 1);
    return report;
}

SpsaVarianceResult spsa_variance_experiment(double g, double c, const std::vector<int>& m_list,
                                            int trials, double eps, RngStream& rng) {
    if (m_list.empty()) throw std::invalid_argument("spsa_variance_experiment: empty M list");
    if (trials < 100) throw std::invalid_argument("spsa_variance_experiment: need >= 100 trials");

    SpsaVarianceResult result;
    for (int m_params : m_list) {
        const std::vector<double> theta(m_params, 0.1);
        const ScalarFn f = [&](const std::vector<double>& t) {
            double acc = 0.0;
            for (double v : t) acc += v;
            return g * acc;
        };
        // Single-direction estimates of component 0.
        double mean = 0.0, sq = 0.0;
        for (int t = 0; t < trials; ++t) {
            const auto report = spsa_gradient(f, theta, c, 0, 1, rng);
            mean += report.values[0];
            sq += report.values[0] * report.values[0];
        }
        mean /= trials;
        const double variance = sq / trials - mean * mean;
        result.points.push_back(
            {m_params, variance,
             static_cast<std::uint64_t>(std::ceil(std::max(variance, 0.0) / (eps * eps)))});
    }

    // Least-squares fit variance = intercept + slope * M.
    const double n = static_cast<double>(result.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : result.points) {
        sx += p.m_params;
        sy += p.variance;
        sxx += double(p.m_params) * p.m_params;
        sxy += p.m_params * p.variance;
    }
    const double denom = n * sxx - sx * sx;
    result.slope = (denom != 0.0) ? (n * sxy - sx * sy) / denom : 0.0;
    result.intercept = (sy - result.slope * sx) / n;
    return result;
}

} // namespace gentlegrad::estimators
