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

#include <functional>
#include <vector>

#include "gentlegrad/estimators/shots.hpp"

namespace gentlegrad::estimators {

/// Objective for the function form of SPSA; values are exact.
using ScalarFn = std::function<double(const std::vector<double>&)>;

/// Simultaneous-perturbation gradient estimate, averaged over `samples`
/// Rademacher direction draws:
///   (F(theta + c Delta) - F(theta - c Delta)) / (2 c Delta_j).
/// shots = 0 evaluates exactly; otherwise each function value carries
/// measurement noise (Bernoulli shots for models).
GradientReport spsa_gradient(const ScalarFn& f, const std::vector<double>& theta, double c,
                             std::uint64_t shots, std::uint64_t samples, RngStream& rng);

GradientReport spsa_gradient(const LayeredModel& m, const StateVector& input, double c,
                             std::uint64_t shots, std::uint64_t samples, RngStream& rng);

struct SpsaVariancePoint {
    int m_params;
    double variance;          // empirical single-component variance
    std::uint64_t shots_to_eps; // ceil(variance / eps^2)
};

struct SpsaVarianceResult {
    std::vector<SpsaVariancePoint> points;
    double slope = 0.0;     // least-squares fit variance ~ intercept + slope*M
    double intercept = 0.0;
};

/// Empirical variance of the single-direction SPSA estimator on the linear
/// function f(theta) = g * sum(theta), for each parameter count in m_list.
/// Requires trials >= 100.
SpsaVarianceResult spsa_variance_experiment(double g, double c, const std::vector<int>& m_list,
                                            int trials, double eps, RngStream& rng);

} // namespace gentlegrad::estimators
