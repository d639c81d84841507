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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "gentlegrad/tomography/backprop.hpp"
#include "gentlegrad/tomography/learner.hpp"
#include "gentlegrad/tomography/shadow_tomography.hpp"
#include "gentlegrad/tomography/swap_test.hpp"
#include "gentlegrad/tomography/threshold.hpp"
#include "oracles.hpp"

using namespace gentlegrad;
using namespace gentlegrad::tomography;
using models::LayeredModel;
using models::ModelKind;
using qcore::DensityMatrix;
using qcore::PauliString;
using qcore::RngStream;
using qcore::StateVector;

namespace {

PauliString random_word(int n, RngStream& rng) {
    while (true) {
        std::uint64_t x = 0, z = 0;
        for (int q = 0; q < n; ++q) {
            switch (rng.below(4)) {
                case 1: x |= 1ull << q; break;
                case 2: z |= 1ull << q; break;
                case 3: x |= 1ull << q; z |= 1ull << q; break;
                default: break;
            }
        }
        PauliString p(n, x, z);
        if (!p.is_identity()) return p;
    }
}

} // namespace

TEST_CASE("learner predictions") {
    OnlineLearner learner(2, 0.05);
    CHECK(learner.predict(PauliString::parse("Z.")) == doctest::Approx(0.0)); // maximally mixed

    OnlineLearner planted(1, 0.05);
    planted.set_omega(DensityMatrix::from_state(StateVector::zero(1)));
    CHECK(planted.predict(PauliString::parse("Z")) == doctest::Approx(1.0));

    SUBCASE("random hypothesis matches a dense trace oracle") {
        RngStream rng(211);
        StateVector a = StateVector::random(2, rng);
        StateVector b = StateVector::random(2, rng);
        DensityMatrix mix(2);
        const auto da = DensityMatrix::from_state(a);
        const auto db = DensityMatrix::from_state(b);
        for (std::size_t c = 0; c < mix.dim(); ++c)
            for (std::size_t r = 0; r < mix.dim(); ++r)
                mix.at(r, c) = 0.4 * da.at(r, c) + 0.6 * db.at(r, c);
        OnlineLearner l(2, 0.05);
        l.set_omega(mix);
        for (int trial = 0; trial < 10; ++trial) {
            const PauliString p = random_word(2, rng);
            Eigen::Map<const Eigen::MatrixXcd> em(mix.data(), 4, 4);
            const double want = (oracles::dense_pauli(p) * em).trace().real();
            CHECK(l.predict(p) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("learner updates") {
    SUBCASE("repeated updates drive the prediction to the target monotonically") {
        OnlineLearner l(1, 0.1);
        const PauliString z = PauliString::parse("Z");
        double prev = l.predict(z);
        for (int i = 0; i < 60; ++i) {
            l.update(z, 1.0);
            const double cur = l.predict(z);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
        CHECK(prev > 0.9);
        CHECK(l.mistakes() == 60);
    }
    SUBCASE("update with the current prediction is a no-op") {
        OnlineLearner l(2, 0.1);
        const PauliString p = PauliString::parse("XZ");
        l.update(p, 0.5);
        const double before = l.predict(p);
        DensityMatrix snapshot = l.omega();
        l.update(p, before);
        CHECK(trace_distance(snapshot, l.omega()) < 1e-10);
    }
    SUBCASE("adversarial Pauli stream stays within the mistake budget") {
        const int n = 2;
        const double eps = 0.25;
        RngStream rng(212);
        StateVector psi = StateVector::random(n, rng);
        OnlineLearner l(n, eps / 4.0);
        std::uint64_t mistakes = 0;
        for (int k = 0; k < 2000; ++k) {
            const PauliString e = random_word(n, rng);
            const double truth = qcore::expectation(psi, e);
            if (std::abs(l.predict(e) - truth) > eps) {
                l.update(e, truth);
                ++mistakes;
            }
        }
        CHECK(mistakes <= std::uint64_t(40.0 * n / (eps * eps)));
        CHECK(mistakes < 600); // far below the bound at desk scale
    }
    SUBCASE("hypothesis state stays valid through updates and rotations") {
        RngStream rng(213);
        OnlineLearner l(2, 0.1);
        for (int i = 0; i < 12; ++i) {
            l.update(random_word(2, rng), rng.uniform(-1.0, 1.0));
            qcore::ControlledGates op;
            op.gates.push_back(qcore::Gate::rot(random_word(2, rng), rng.uniform(-1.5, 1.5)));
            l.rotate({op});
            CHECK(l.omega().is_valid_state(1e-9));
        }
    }
}

TEST_CASE("threshold search emulation") {
    const int M = 16;
    const double eps = 0.1;
    TomographyConfig cfg;
    ThresholdConfig tc{eps, M, batch_size(M, eps, cfg), 1000, cfg.kappa_refine};

    RngStream state_rng(214);
    StateVector psi = StateVector::random(3, state_rng);
    const PauliString e = random_word(3, state_rng);
    const double truth = qcore::expectation(psi, e);

    SUBCASE("exact guess passes with high probability") {
        int passes = 0;
        for (int t = 0; t < 300; ++t) {
            ThresholdSession session(tc);
            RngStream rng(500 + t);
            CopyLedger ledger;
            passes += session.check(e, truth, psi, rng, ledger).pass;
        }
        CHECK(passes >= 294); // >= 0.98 empirically, spec asks 0.99 at scale
    }
    SUBCASE("guess off by 2 eps flags and refines within eps/4") {
        int good = 0;
        for (int t = 0; t < 200; ++t) {
            ThresholdSession session(tc);
            RngStream rng(700 + t);
            CopyLedger ledger;
            const double a = truth + 2 * eps;
            const auto outcome = session.check(e, a, psi, rng, ledger);
            good += (!outcome.pass && std::abs(outcome.refined - truth) <= eps / 4.0);
        }
        CHECK(good >= 190);
    }
    SUBCASE("guarantee predicate on random guesses") {
        int violations = 0;
        const int trials = 400;
        for (int t = 0; t < trials; ++t) {
            ThresholdSession session(tc);
            RngStream rng(900 + t);
            CopyLedger ledger;
            const double a = truth + rng.uniform(-2 * eps, 2 * eps);
            const auto outcome = session.check(e, a, psi, rng, ledger);
            if (outcome.pass && std::abs(a - truth) > eps) ++violations;
            if (!outcome.pass && std::abs(a - truth) <= eps / 4.0) ++violations;
        }
        CHECK(violations <= trials / 100);
    }
    SUBCASE("boundary guesses satisfy the predicate either way") {
        RngStream rng(215);
        CopyLedger ledger;
        ThresholdSession session(tc);
        const double a = truth + eps / 2.0;
        const auto outcome = session.check(e, a, psi, rng, ledger);
        if (outcome.pass) CHECK(std::abs(a - truth) <= eps);
        else CHECK(std::abs(a - truth) > eps / 4.0);
    }
    SUBCASE("batch exhaustion raises with the ledger snapshot") {
        ThresholdConfig tiny = tc;
        tiny.max_batches = 2;
        ThresholdSession session(tiny);
        RngStream rng(216);
        CopyLedger ledger;
        int flags = 0;
        try {
            for (int i = 0; i < 10; ++i) {
                const auto o = session.check(e, truth + 3 * eps, psi, rng, ledger);
                flags += !o.pass;
            }
            FAIL("expected BatchExhausted");
        } catch (const BatchExhausted& ex) {
            CHECK(flags == 2);
            CHECK(ex.ledger.destructive_shots > 0);
        }
    }
}

TEST_CASE("shadow tomography") {
    SUBCASE("single observable on |0>") {
        RngStream rng(217);
        const StateVector psi = StateVector::zero(1);
        const auto res = shadow_tomography(psi, {PauliString::parse("Z")}, 0.1, rng);
        CHECK(res.estimates[0] >= 0.9);
        CHECK(res.estimates[0] <= 1.0);
        CHECK(res.ledger.shots_conserved());
    }
    SUBCASE("n=4, M=64 random Paulis within eps in >= 90/100 seeds") {
        RngStream setup(218);
        const StateVector psi = StateVector::random(4, setup);
        std::vector<PauliString> obs;
        for (int i = 0; i < 64; ++i) obs.push_back(random_word(4, setup));
        int ok = 0;
        for (int seed = 0; seed < 100; ++seed) {
            RngStream rng(1200 + seed);
            const auto res = shadow_tomography(psi, obs, 0.1, rng);
            double maxerr = 0;
            for (int k = 0; k < 64; ++k)
                maxerr = std::max(maxerr,
                                  std::abs(res.estimates[k] - qcore::expectation(psi, obs[k])));
            ok += maxerr <= 0.1;
        }
        CHECK(ok >= 90);
    }
    SUBCASE("copy allowance scales like the squared log ratio") {
        TomographyConfig cfg;
        const double eps = 0.1;
        const auto m16 = batch_size(16, eps, cfg) * batch_allowance(3, eps, cfg);
        const auto m256 = batch_size(256, eps, cfg) * batch_allowance(3, eps, cfg);
        CHECK(double(m256) / double(m16) <= 4.0);
    }
}

TEST_CASE("backprop gradients (Algorithm 2 driver)") {
    SUBCASE("zero-gradient QNN returns estimates within eps of zero") {
        RngStream rng(219);
        std::vector<models::Layer> layers(6);
        for (auto& l : layers) l.generator = PauliString::parse("Z.Z");
        const LayeredModel m = LayeredModel::qnn(2, std::move(layers), std::vector<double>(6, 0.3));
        const auto rep = backprop_gradients(m, StateVector::zero(2), 0.1, rng);
        for (double b : rep.values) CHECK(std::abs(b) <= 0.1);
    }
    SUBCASE("random QNN: estimates track half-gradients; ledger is consistent") {
        RngStream setup(220);
        const LayeredModel m = models::random_model(ModelKind::Qnn, 3, 16, setup);
        StateVector in = StateVector::random(3, setup);
        const auto exact = models::exact_gradient(m, in);
        int ok = 0;
        for (int seed = 0; seed < 20; ++seed) {
            RngStream rng(3000 + seed);
            std::vector<BackpropTraceRow> trace;
            const auto rep = backprop_gradients(m, in, 0.1, rng, {}, &trace);
            double maxerr = 0;
            for (int k = 0; k < 16; ++k)
                maxerr = std::max(maxerr, std::abs(rep.values[k] - 0.5 * exact.values[k]));
            ok += maxerr <= 0.1;
            CHECK(rep.ledger.shots_conserved());
            const TomographyConfig defaults;
            const auto m0 = batch_size(16, 0.1, defaults);
            CHECK(rep.ledger.copies_total == batch_allowance(5, 0.1, defaults) * m0);
            // Consumption stays within the requested allowance.
            CHECK(rep.ledger.batches_used * m0 <= rep.ledger.copies_total);
            CHECK(rep.ledger.learner_updates + 1 == rep.ledger.batches_used);
            CHECK(trace.size() == 16);
        }
        CHECK(ok >= 18);
    }
    SUBCASE("plant-the-truth: hypothesis rotated in lockstep stays exact") {
        RngStream setup(221);
        const LayeredModel m = models::random_model(ModelKind::Qnn, 2, 8, setup);
        StateVector in = StateVector::random(2, setup);
        StateVector state = models::build_gradient_state(m, in, 0);
        OnlineLearner learner(m.n_data() + 2, 0.05);
        learner.set_omega(DensityMatrix::from_state(state));
        const PauliString x = models::ancilla_x(m);
        for (int k = 0; k + 1 < m.num_layers(); ++k) {
            const auto step = models::advance_ops(m, k);
            for (const auto& op : step) qcore::apply_gate_list(state, op.gates, op.ctrl);
            learner.rotate(step);
            CHECK(learner.predict(x) ==
                  doctest::Approx(models::ancilla_x_expectation(state)).epsilon(1e-9));
        }
    }
    SUBCASE("gate applications grow quasi-linearly in M") {
        RngStream setup(222);
        const StateVector in = StateVector::random(3, setup);
        RngStream m16_rng(10);
        RngStream m64_rng(10);
        const LayeredModel m16 = models::random_model(ModelKind::Qnn, 3, 16, m16_rng);
        const LayeredModel m64 = models::random_model(ModelKind::Qnn, 3, 64, m64_rng);
        RngStream r1(223), r2(224);
        const auto rep16 = backprop_gradients(m16, in, 0.1, r1);
        const auto rep64 = backprop_gradients(m64, in, 0.1, r2);
        const double ratio = double(rep64.ledger.gate_applications) /
                             double(rep16.ledger.gate_applications);
        CHECK(ratio <= 6.0);
        CHECK(ratio >= 2.0);
    }
    SUBCASE("rejects non-QNN models and oversized registers") {
        RngStream rng(225);
        const LayeredModel simple = models::random_model(ModelKind::SimpleVariational, 2, 2, rng);
        CHECK_THROWS(backprop_gradients(simple, StateVector::zero(2), 0.1, rng));
    }
}

TEST_CASE("ideal swap-test baseline (Algorithm 3 driver)") {
    RngStream rng(226);
    SUBCASE("single-layer model matches the exact gradient") {
        models::Layer l;
        l.generator = PauliString::parse("X");
        const LayeredModel m =
            LayeredModel::simple(1, {l}, {0.6}, PauliString::parse("Z"));
        const auto swap = ideal_swap_test_gradient(m, StateVector::zero(1));
        const auto exact = models::exact_gradient(m, StateVector::zero(1));
        CHECK(swap.values[0] == doctest::Approx(exact.values[0]).epsilon(1e-12));
    }
    SUBCASE("random rotation-layer model, M=20, componentwise equality") {
        const LayeredModel m = models::random_model(ModelKind::SimpleVariational, 3, 20, rng, 0);
        StateVector in = StateVector::random(3, rng);
        const auto swap = ideal_swap_test_gradient(m, in);
        const auto exact = models::exact_gradient(m, in);
        for (int k = 0; k < 20; ++k)
            CHECK(std::abs(swap.values[k] - exact.values[k]) < 1e-10);
    }
    SUBCASE("gate counter within 4M + 2 forward passes") {
        for (int M : {8, 32, 64}) {
            RngStream mrng(300 + M);
            const LayeredModel m =
                models::random_model(ModelKind::SimpleVariational, 3, M, mrng, 0);
            StateVector in = StateVector::random(3, mrng);
            qcore::GateOpsScope fwd;
            (void)evaluate_model(m, in);
            const auto forward_cost = fwd.elapsed();
            const auto rep = ideal_swap_test_gradient(m, in);
            CHECK(rep.ledger.gate_applications <= 4 * std::uint64_t(M) + 2 * forward_cost);
        }
    }
    SUBCASE("QNN models are rejected") {
        const LayeredModel qnn = LayeredModel::qnn(2, {}, {});
        CHECK_THROWS(ideal_swap_test_gradient(qnn, StateVector::zero(2)));
    }
}
