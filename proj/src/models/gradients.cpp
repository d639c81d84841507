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
#include "gentlegrad/models/model.hpp"

namespace gentlegrad::models {

namespace {
constexpr double kQuarterPi = 0.78539816339744830962;
}

GradientReport exact_gradient(const LayeredModel& m, const StateVector& input) {
    const int M = m.num_layers();
    GradientReport report;
    report.method = "exact";
    report.values.assign(M, 0.0);
    qcore::GateOpsScope ops;

    // Forward sweep, then pull the observable back layer by layer. With
    // layers exp(s i theta P) the derivative is -2 s Im <phi_k| P_k |psi_k>.
    StateVector psi = m.prepare(input);
    for (int j = 0; j < M; ++j) m.apply_layer(psi, j, m.theta()[j]);
    StateVector phi = psi;
    qcore::apply_pauli(phi, m.observable());
    const double s = m.rotation_sign();
    for (int k = M - 1; k >= 0; --k) {
        const qcore::cplx b = qcore::pauli_bilinear(phi, m.layer(k).generator, psi);
        report.values[k] = -2.0 * s * b.imag();
        m.apply_layer_inverse(psi, k, m.theta()[k]);
        m.apply_layer_inverse(phi, k, m.theta()[k]);
    }
    report.ledger.gate_applications = ops.elapsed();
    return report;
}

GradientReport parameter_shift_gradient(const LayeredModel& m, const StateVector& input) {
    const int M = m.num_layers();
    GradientReport report;
    report.method = "paramshift";
    report.values.assign(M, 0.0);
    qcore::GateOpsScope ops;

    LayeredModel shifted = m;
    for (int k = 0; k < M; ++k) {
        const double theta_k = m.theta()[k];
        shifted.theta()[k] = theta_k + kQuarterPi;
        const double plus = evaluate_model(shifted, input);
        shifted.theta()[k] = theta_k - kQuarterPi;
        const double minus = evaluate_model(shifted, input);
        shifted.theta()[k] = theta_k;
        report.values[k] = plus - minus;
    }
    report.ledger.gate_applications = ops.elapsed();
    report.ledger.circuit_executions = 2 * static_cast<std::uint64_t>(M);
    return report;
}

} // namespace gentlegrad::models
