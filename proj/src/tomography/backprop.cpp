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
#include "gentlegrad/tomography/backprop.hpp"

#include <stdexcept>

namespace gentlegrad::tomography {

using models::LayeredModel;
using qcore::StateVector;

models::GradientReport backprop_gradients(const LayeredModel& m, const StateVector& input,
                                          double eps, qcore::RngStream& rng,
                                          const TomographyConfig& cfg,
                                          std::vector<BackpropTraceRow>* trace) {
    if (m.kind() != models::ModelKind::Qnn)
        throw std::invalid_argument("backprop_gradients: QNN model required");
    const int n_total = m.n_data() + 2;
    if (n_total > 12)
        throw std::invalid_argument("backprop_gradients: hypothesis state above the 12-qubit cap");
    const int M = m.num_layers();

    models::GradientReport report;
    report.method = "shadow-backprop";
    report.epsilon = eps;
    if (M == 0) return report;

    ThresholdConfig tc;
    tc.eps = eps;
    tc.num_observables = M;
    tc.m0 = batch_size(M, eps, cfg);
    tc.max_batches = batch_allowance(n_total, eps, cfg);
    tc.kappa_refine = cfg.kappa_refine;
    ThresholdSession session(tc);

    const double eta = (cfg.eta > 0.0) ? cfg.eta : eps / 4.0;
    OnlineLearner learner(n_total, eta);
    const qcore::PauliString x_anc = models::ancilla_x(m);

    // Gate accounting covers the simulated registers only: the batch
    // representative below plus the initial preparation. Hypothesis-state
    // rotations are classical and do not advance the counter.
    qcore::GateOpsScope ops;
    StateVector state = models::build_gradient_state(m, input, 0);

    report.values.reserve(M);
    for (int k = 0; k < M; ++k) {
        const double a_k = learner.predict(x_anc);
        const auto outcome = session.check(x_anc, a_k, state, rng, report.ledger);
        const double b_k = outcome.pass ? a_k : outcome.refined;
        report.values.push_back(b_k);
        if (!outcome.pass) learner.update(x_anc, b_k);
        if (trace)
            trace->push_back({k, a_k, !outcome.pass, b_k, session.batches_opened(),
                              ops.elapsed()});
        if (k + 1 < M) {
            const auto step = models::advance_ops(m, k);
            for (const auto& op : step) qcore::apply_gate_list(state, op.gates, op.ctrl);
            learner.rotate(step);
        }
    }

    report.ledger.gate_applications = ops.elapsed();
    report.ledger.batches_used = session.batches_opened();
    // The protocol's sample complexity: R batches of m0 copies requested up
    // front; the mistake bound keeps flags below R, so this allowance is
    // what a physical run must supply. Consumption is batches_used * m0.
    report.ledger.copies_total = tc.max_batches * tc.m0;
    report.ledger.learner_updates = learner.mistakes();
    return report;
}

} // namespace gentlegrad::tomography
