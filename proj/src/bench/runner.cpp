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
#include "gentlegrad/bench/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gentlegrad/estimators/shots.hpp"
#include "gentlegrad/estimators/spsa.hpp"
#include "gentlegrad/markov/chain_io.hpp"
#include "gentlegrad/models/model_io.hpp"
#include "gentlegrad/shadows/bell_gradients.hpp"
#include "gentlegrad/shadows/identify.hpp"
#include "gentlegrad/tomography/backprop.hpp"
#include "gentlegrad/tomography/swap_test.hpp"

namespace gentlegrad::bench {

namespace {

using models::LayeredModel;
using models::ModelKind;
using qcore::RngStream;
using qcore::StateVector;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b, double scale_b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - scale_b * b[i]));
    return m;
}

ModelKind required_kind(const std::string& method) {
    if (method == "shadow-backprop") return ModelKind::Qnn;
    return ModelKind::SimpleVariational;
}

LayeredModel model_for(const ExperimentConfig& cfg, std::uint64_t seed) {
    if (!cfg.model_path.empty()) {
        LayeredModel m = models::load_model(cfg.model_path);
        if (cfg.method == "shadow-backprop" && m.kind() != ModelKind::Qnn)
            throw std::invalid_argument("run_experiment: method needs a QNN model");
        if ((cfg.method == "ideal-gentle" || cfg.method == "pauli-gentle" ||
             cfg.method == "spsa") &&
            m.kind() != ModelKind::SimpleVariational)
            throw std::invalid_argument("run_experiment: method needs a simple model");
        return m;
    }
    RngStream rng(seed, 0xA11CE);
    return models::random_model(required_kind(cfg.method), cfg.n, cfg.m_params, rng);
}

StateVector input_for(const LayeredModel& m, std::uint64_t seed) {
    RngStream rng(seed, 0xB0B);
    return StateVector::random(m.n_data(), rng);
}

markov::StochasticChain chain_for(const ExperimentConfig& cfg, std::uint64_t seed) {
    RngStream rng(seed, 0xC0FFEE);
    const int n_bits = cfg.n;
    std::vector<markov::LocalGate> gates(cfg.m_params);
    for (auto& g : gates) {
        const bool two = n_bits >= 2 && rng.below(2);
        const int dim = two ? 4 : 2;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        for (int col = 0; col < dim; ++col) {
            double off = 0.0;
            for (int row = 0; row < dim; ++row) {
                if (row == col) continue;
                h(row, col) = rng.uniform() / (dim - 1);
                off += h(row, col);
            }
            h(col, col) = -off;
        }
        const double mx = h.cwiseAbs().maxCoeff();
        if (mx > 1.0) h /= mx;
        if (two) {
            int a = int(rng.below(n_bits));
            int b = int(rng.below(n_bits - 1));
            if (b >= a) ++b;
            g.support = {a, b};
        } else {
            g.support = {int(rng.below(n_bits))};
        }
        g.generator = h;
        g.theta = rng.uniform(0.0, 1.5);
    }
    std::vector<double> init(std::size_t(1) << n_bits, 0.0);
    init[0] = 1.0;
    std::vector<double> obs(init.size());
    for (auto& o : obs) o = rng.uniform(-1.0, 1.0);
    return markov::StochasticChain(n_bits, std::move(gates), std::move(init), std::move(obs));
}

ResultRow run_one(const ExperimentConfig& cfg, std::uint64_t seed,
                  std::vector<tomography::BackpropTraceRow>* trace) {
    ResultRow row;
    row.method = cfg.method;
    row.n = cfg.n;
    row.m_params = cfg.m_params;
    row.epsilon = cfg.epsilon;
    row.seed = seed;

    RngStream rng(seed, 0xD1CE);
    const auto t0 = std::chrono::steady_clock::now();

    if (cfg.method == "markov") {
        const auto chain =
            cfg.model_path.empty() ? chain_for(cfg, seed) : markov::load_chain(cfg.model_path);
        row.n = chain.n_bits();
        row.m_params = chain.num_gates();
        const std::uint64_t paths =
            cfg.markov_paths ? cfg.markov_paths
                             : std::uint64_t(std::ceil(16.0 / (cfg.epsilon * cfg.epsilon)));
        const auto est = markov::markov_backprop_estimate(chain, paths, rng);
        const auto exact = markov::markov_exact_gradient(chain);
        row.max_abs_error = max_abs_diff(est.gradient, exact, 1.0);
        row.copies_used = paths;
        row.destructive_shots = paths;
        row.gate_applications = paths * std::uint64_t(chain.num_gates());
    } else if (cfg.method == "identify") {
        RngStream target_rng(seed, 0x7A537);
        const auto candidates = shadows::enumerate_circuits(cfg.gate_set, cfg.max_gates, cfg.n);
        const auto& target =
            candidates.states[target_rng.below(candidates.states.size())];
        shadows::ShadowConfig scfg;
        scfg.kappa_s = cfg.kappa_s;
        const auto res =
            shadows::identify_circuit(cfg.gate_set, cfg.max_gates, cfg.n, target, cfg.epsilon,
                                      rng, scfg);
        row.max_abs_error =
            std::max(0.0, 1.0 - std::norm(qcore::inner(res.state, target)));
        row.copies_used = res.ledger.copies_total;
        row.destructive_shots = res.ledger.destructive_shots;
        row.gate_applications = res.ledger.gate_applications;
    } else {
        const LayeredModel m = model_for(cfg, seed);
        const StateVector input = input_for(m, seed);
        const auto exact = models::exact_gradient(m, input);

        models::GradientReport rep;
        double oracle_scale = 1.0;
        if (cfg.method == "exact") {
            rep = models::exact_gradient(m, input);
            // Cross-route check against the shift rule on exact expectations.
            const auto shift = models::parameter_shift_gradient(m, input);
            row.max_abs_error = max_abs_diff(rep.values, shift.values, 1.0);
        } else if (cfg.method == "paramshift") {
            rep = models::parameter_shift_gradient(m, input);
        } else if (cfg.method == "paramshift-shots") {
            rep = estimators::paramshift_shot_gradient(m, input, cfg.epsilon, cfg.delta, rng);
        } else if (cfg.method == "spsa") {
            rep = estimators::spsa_gradient(m, input, cfg.spsa_c, cfg.spsa_shots,
                                            cfg.spsa_samples, rng);
        } else if (cfg.method == "shadow-backprop") {
            tomography::TomographyConfig tcfg;
            tcfg.kappa_r = cfg.kappa_r;
            tcfg.kappa_0 = cfg.kappa_0;
            tcfg.kappa_refine = cfg.kappa_refine;
            tcfg.eta = cfg.eta;
            rep = tomography::backprop_gradients(m, input, cfg.epsilon, rng, tcfg, trace);
            oracle_scale = 0.5; // estimates target half-gradients
        } else if (cfg.method == "pauli-gentle") {
            // Prop.-4 setting: theta = 0, V = the concatenated fixed layers,
            // targets 2 tr(V rho V^dag P_k) for the model generators.
            qcore::GateList v;
            std::vector<qcore::PauliString> paulis;
            for (const auto& layer : m.layers()) {
                v.insert(v.end(), layer.fixed.begin(), layer.fixed.end());
                paulis.push_back(layer.generator);
            }
            shadows::BellSchemeConfig bcfg;
            bcfg.kappa_b = cfg.kappa_b;
            rep = shadows::special_case_gradient(v, input, paulis, cfg.epsilon, rng, bcfg);
            StateVector sigma = input;
            qcore::apply_gate_list(sigma, v);
            std::vector<double> truth(paulis.size());
            for (std::size_t i = 0; i < paulis.size(); ++i)
                truth[i] = 2.0 * qcore::expectation(sigma, paulis[i]);
            row.max_abs_error = max_abs_diff(rep.values, truth, 1.0);
        } else if (cfg.method == "ideal-gentle") {
            rep = tomography::ideal_swap_test_gradient(m, input);
        } else {
            throw std::invalid_argument("run_experiment: unhandled method " + cfg.method);
        }

        if (cfg.method != "exact" && cfg.method != "pauli-gentle")
            row.max_abs_error = max_abs_diff(rep.values, exact.values, oracle_scale);
        row.copies_used = rep.ledger.copies_total;
        row.batches_used = rep.ledger.batches_used;
        row.gate_applications = rep.ledger.gate_applications;
        row.destructive_shots = rep.ledger.destructive_shots;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const char* fixed = std::getenv("GENTLEGRAD_FIXED_WALL");
    row.wall_ms = (fixed && fixed[0] == '1')
                      ? 0
                      : std::uint64_t(
                            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return row;
}

} // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      std::vector<tomography::BackpropTraceRow>* trace) {
    cfg.validate();
    std::vector<ResultRow> rows;
    rows.reserve(cfg.repeats);
    for (int r = 0; r < cfg.repeats; ++r)
        rows.push_back(run_one(cfg, cfg.seed + std::uint64_t(r), trace));
    return rows;
}

std::string csv_header() {
    return "schema_version,method,n,M,epsilon,seed,copies_used,batches_used,"
           "gate_applications,destructive_shots,wall_ms,max_abs_error";
}

std::string csv_row(const ResultRow& row) {
    std::ostringstream out;
    out << kCsvSchemaVersion << ',' << row.method << ',' << row.n << ',' << row.m_params << ','
        << fmt_double(row.epsilon) << ',' << row.seed << ',' << row.copies_used << ','
        << row.batches_used << ',' << row.gate_applications << ',' << row.destructive_shots << ','
        << row.wall_ms << ',' << fmt_double(row.max_abs_error);
    return out.str();
}

void append_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    const bool fresh =
        !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("append_csv: cannot open " + path);
    if (fresh) out << csv_header() << '\n';
    for (const auto& row : rows) out << csv_row(row) << '\n';
}

std::vector<ResultRow> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::vector<ResultRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            if (line.rfind("schema_version", 0) == 0) continue;
        }
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 12) throw std::runtime_error("read_csv: malformed row");
        ResultRow row;
        row.method = fields[1];
        row.n = std::stoi(fields[2]);
        row.m_params = std::stoi(fields[3]);
        row.epsilon = std::stod(fields[4]);
        row.seed = std::stoull(fields[5]);
        row.copies_used = std::stoull(fields[6]);
        row.batches_used = std::stoull(fields[7]);
        row.gate_applications = std::stoull(fields[8]);
        row.destructive_shots = std::stoull(fields[9]);
        row.wall_ms = std::stoull(fields[10]);
        row.max_abs_error = std::stod(fields[11]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gentlegrad::bench
