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

#include <cmath>

#include "gentlegrad/estimators/shots.hpp"
#include "gentlegrad/estimators/spsa.hpp"

using namespace gentlegrad;
using namespace gentlegrad::estimators;
using models::LayeredModel;
using models::ModelKind;
using qcore::PauliString;
using qcore::RngStream;
using qcore::StateVector;

TEST_CASE("shot_estimate") {
    RngStream rng(101);
    SUBCASE("deterministic eigenstate is exact for any shot count") {
        models::Layer l;
        l.generator = PauliString::parse("X");
        const LayeredModel m = LayeredModel::simple(1, {l}, {0.0}, PauliString::parse("Z"));
        CHECK(shot_estimate(m, StateVector::zero(1), 3, rng) == doctest::Approx(1.0));
        CHECK(shot_estimate(m, StateVector::zero(1), 1000, rng) == doctest::Approx(1.0));
    }
    SUBCASE("zero-expectation state stays within the Hoeffding band") {
        models::Layer l;
        l.generator = PauliString::parse("Z");
        const LayeredModel m = LayeredModel::simple(1, {l}, {0.0}, PauliString::parse("Z"));
        StateVector plus = StateVector::zero(1);
        qcore::apply_gate(plus, qcore::Gate::h(0));
        int hits = 0;
        for (int trial = 0; trial < 50; ++trial)
            hits += std::abs(shot_estimate(m, plus, 10000, rng)) <= 0.05;
        CHECK(hits >= 48);
    }
    SUBCASE("error shrinks like 1/sqrt(shots)") {
        models::Layer l;
        l.generator = PauliString::parse("Z");
        const LayeredModel m = LayeredModel::simple(1, {l}, {0.0}, PauliString::parse("Z"));
        StateVector plus = StateVector::zero(1);
        qcore::apply_gate(plus, qcore::Gate::h(0));
        double err2 = 0, err4 = 0, err6 = 0;
        const int reps = 40;
        for (int i = 0; i < reps; ++i) {
            err2 += std::abs(shot_estimate(m, plus, 100, rng));
            err4 += std::abs(shot_estimate(m, plus, 10000, rng));
            err6 += std::abs(shot_estimate(m, plus, 1000000, rng));
        }
        // Mean absolute errors should drop by roughly 10x per decade pair.
        CHECK(err2 / err4 > 3.0);
        CHECK(err2 / err4 < 33.0);
        CHECK(err4 / err6 > 3.0);
        CHECK(err4 / err6 < 33.0);
    }
    SUBCASE("zero shots rejected") {
        models::Layer l;
        l.generator = PauliString::parse("Z");
        const LayeredModel m = LayeredModel::simple(1, {l}, {0.0}, PauliString::parse("Z"));
        CHECK_THROWS(shot_estimate(m, StateVector::zero(1), 0, rng));
    }
}

TEST_CASE("paramshift_shot_gradient") {
    SUBCASE("zero-gradient model lands within eps of zero") {
        RngStream rng(102);
        std::vector<models::Layer> layers(4);
        for (auto& l : layers) l.generator = PauliString::parse("Z...");
        const LayeredModel m = LayeredModel::simple(4, std::move(layers), {0, 0, 0, 0},
                                                    PauliString::parse("Z..."));
        const auto report = paramshift_shot_gradient(m, StateVector::zero(4), 0.1, 0.05, rng);
        for (double g : report.values) CHECK(std::abs(g) <= 0.1);
    }
    SUBCASE("random model recovers the exact gradient in >= 95 of 100 seeds") {
        RngStream model_rng(103);
        const LayeredModel m = models::random_model(ModelKind::SimpleVariational, 4, 8, model_rng);
        StateVector in = StateVector::random(4, model_rng);
        const auto exact = models::exact_gradient(m, in);
        int ok = 0;
        for (int seed = 0; seed < 100; ++seed) {
            RngStream rng(900 + seed);
            const auto report = paramshift_shot_gradient(m, in, 0.1, 0.05, rng);
            double maxerr = 0;
            for (int k = 0; k < m.num_layers(); ++k)
                maxerr = std::max(maxerr, std::abs(report.values[k] - exact.values[k]));
            ok += maxerr <= 0.1;
        }
        CHECK(ok >= 95);
    }
    SUBCASE("ledger records protocol-level costs and quadratic M trend") {
        RngStream rng(104);
        const LayeredModel m8 = models::random_model(ModelKind::SimpleVariational, 3, 8, rng);
        const LayeredModel m16 = models::random_model(ModelKind::SimpleVariational, 3, 16, rng);
        StateVector in = StateVector::zero(3);
        const auto r8 = paramshift_shot_gradient(m8, in, 0.2, 0.1, rng);
        const auto r16 = paramshift_shot_gradient(m16, in, 0.2, 0.1, rng);
        const auto shots8 = paramshift_shots_per_term(8, 0.2, 0.1);
        const auto shots16 = paramshift_shots_per_term(16, 0.2, 0.1);
        CHECK(r8.ledger.circuit_executions == 2 * 8 * shots8);
        CHECK(r16.ledger.circuit_executions == 2 * 16 * shots16);
        const double ratio = double(r16.ledger.gate_applications) / r8.ledger.gate_applications;
        CHECK(ratio > 3.0);  // quadratic trend: ~4x with a slowly growing log
        CHECK(ratio < 5.0);
        CHECK(r8.ledger.shots_conserved());
    }
    SUBCASE("estimator is unbiased") {
        RngStream model_rng(105);
        const LayeredModel m = models::random_model(ModelKind::SimpleVariational, 2, 2, model_rng);
        StateVector in = StateVector::random(2, model_rng);
        const auto exact = models::exact_gradient(m, in);
        const int seeds = 3000;
        const double eps = 0.25, delta = 0.1;
        std::vector<double> mean(m.num_layers(), 0.0);
        for (int s = 0; s < seeds; ++s) {
            RngStream rng(4000 + s);
            const auto rep = paramshift_shot_gradient(m, in, eps, delta, rng);
            for (int k = 0; k < m.num_layers(); ++k) mean[k] += rep.values[k];
        }
        const auto shots = paramshift_shots_per_term(m.num_layers(), eps, delta);
        // Component standard error: sqrt(2 / shots) / sqrt(seeds) bounds the
        // +-1-valued two-term estimator.
        const double se = std::sqrt(2.0 / double(shots)) / std::sqrt(double(seeds));
        for (int k = 0; k < m.num_layers(); ++k)
            CHECK(std::abs(mean[k] / seeds - exact.values[k]) <= 3.5 * se);
    }
}

TEST_CASE("spsa_gradient") {
    SUBCASE("linear function with exact evaluations") {
        RngStream rng(106);
        const double g = 0.7;
        const ScalarFn f = [g](const std::vector<double>& t) {
            double acc = 0;
            for (double v : t) acc += v;
            return g * acc;
        };
        // Single parameter: the direction ratio cancels exactly.
        for (int trial = 0; trial < 8; ++trial) {
            const auto rep = spsa_gradient(f, {0.3}, 0.01, 0, 1, rng);
            CHECK(rep.values[0] == doctest::Approx(g).epsilon(1e-12));
        }
        // Several parameters: exact in expectation; cross terms average out.
        const std::vector<double> theta(12, 0.3);
        const auto rep = spsa_gradient(f, theta, 0.01, 0, 20000, rng);
        for (double v : rep.values)
            CHECK(std::abs(v - g) <= 3.5 * g * std::sqrt(11.0 / 20000.0));
    }
    SUBCASE("component magnitudes are identical for a single direction") {
        RngStream rng(107);
        const ScalarFn f = [](const std::vector<double>& t) {
            double acc = 0;
            for (std::size_t i = 0; i < t.size(); ++i) acc += std::sin(double(i + 1) * t[i]);
            return acc / double(t.size());
        };
        const std::vector<double> theta(9, 0.2);
        const auto rep = spsa_gradient(f, theta, 0.05, 0, 1, rng);
        for (std::size_t j = 1; j < rep.values.size(); ++j)
            CHECK(std::abs(rep.values[j]) == doctest::Approx(std::abs(rep.values[0])));
    }
    SUBCASE("quadratic function: averaged estimate near the analytic gradient") {
        RngStream rng(108);
        // f(t) = sum_j a_j t_j^2; df/dt_j = 2 a_j t_j.
        std::vector<double> a = {0.3, -0.2, 0.5, 0.1};
        const ScalarFn f = [&a](const std::vector<double>& t) {
            double acc = 0;
            for (std::size_t j = 0; j < t.size(); ++j) acc += a[j] * t[j] * t[j];
            return acc;
        };
        const std::vector<double> theta = {0.4, -0.3, 0.2, 0.5};
        const int samples = 10000;
        const auto rep = spsa_gradient(f, theta, 1e-3, 0, samples, rng);
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double truth = 2.0 * a[j] * theta[j];
            // Cross-talk noise has scale ~ |grad| per sample.
            const double se = 1.0 / std::sqrt(double(samples));
            CHECK(std::abs(rep.values[j] - truth) <= 3.0 * se);
        }
    }
    SUBCASE("c = 0 rejected") {
        RngStream rng(109);
        const ScalarFn f = [](const std::vector<double>&) { return 0.0; };
        CHECK_THROWS(spsa_gradient(f, {0.1}, 0.0, 0, 1, rng));
    }
}

TEST_CASE("spsa_variance_experiment") {
    SUBCASE("flat function: variance independent of M") {
        RngStream rng(110);
        const auto res = spsa_variance_experiment(0.0, 0.1, {8, 16, 32, 64}, 500, 0.1, rng);
        for (const auto& p : res.points) CHECK(std::abs(p.variance) < 1e-18);
        CHECK(std::abs(res.slope) < 1e-18);
    }
    SUBCASE("unit slope within 25% for g = 1") {
        RngStream rng(111);
        const auto res = spsa_variance_experiment(1.0, 0.1, {8, 16, 32, 64}, 4000, 0.1, rng);
        CHECK(res.slope >= 0.75);
        CHECK(res.slope <= 1.25);
    }
    SUBCASE("shots-to-eps grows linearly in M") {
        RngStream rng(112);
        const auto res = spsa_variance_experiment(1.0, 0.1, {8, 16, 32, 64}, 4000, 0.1, rng);
        // Fit shots = a + b M and require small relative residuals.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = double(res.points.size());
        for (const auto& p : res.points) {
            sx += p.m_params;
            sy += double(p.shots_to_eps);
            sxx += double(p.m_params) * p.m_params;
            sxy += double(p.m_params) * double(p.shots_to_eps);
        }
        const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double a = (sy - b * sx) / n;
        CHECK(b > 0);
        for (const auto& p : res.points) {
            const double fit = a + b * p.m_params;
            CHECK(std::abs(fit - double(p.shots_to_eps)) <= 0.25 * double(p.shots_to_eps));
        }
    }
    SUBCASE("too few trials rejected") {
        RngStream rng(113);
        CHECK_THROWS(spsa_variance_experiment(1.0, 0.1, {8}, 50, 0.1, rng));
    }
}
