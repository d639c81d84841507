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
#include "gentlegrad/bench/config.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace gentlegrad::bench {

using nlohmann::json;

void ExperimentConfig::validate() const {
    static const std::set<std::string> methods = {
        "exact",        "paramshift",   "paramshift-shots", "spsa",    "shadow-backprop",
        "pauli-gentle", "ideal-gentle", "markov",           "identify"};
    if (!methods.count(method))
        throw std::invalid_argument("config: unknown method '" + method + "'");
    if (!(epsilon > 0 && epsilon < 1))
        throw std::invalid_argument("config: epsilon must be in (0,1)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("config: delta must be in (0,1)");
    if (repeats < 1) throw std::invalid_argument("config: repeats must be at least 1");
    if (n < 1) throw std::invalid_argument("config: n must be positive");
    if (m_params < 1) throw std::invalid_argument("config: M must be positive");
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    cfg.method = j.at("method").get<std::string>();
    if (j.contains("model")) cfg.model_path = j.at("model").get<std::string>();
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("M")) cfg.m_params = j.at("M").get<int>();
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("repeats")) cfg.repeats = j.at("repeats").get<int>();
    if (j.contains("constants")) {
        const json& c = j.at("constants");
        if (c.contains("kappa_r")) cfg.kappa_r = c.at("kappa_r").get<double>();
        if (c.contains("kappa_0")) cfg.kappa_0 = c.at("kappa_0").get<double>();
        if (c.contains("kappa_refine")) cfg.kappa_refine = c.at("kappa_refine").get<double>();
        if (c.contains("kappa_b")) cfg.kappa_b = c.at("kappa_b").get<double>();
        if (c.contains("kappa_s")) cfg.kappa_s = c.at("kappa_s").get<double>();
        if (c.contains("eta")) cfg.eta = c.at("eta").get<double>();
        if (c.contains("c")) cfg.spsa_c = c.at("c").get<double>();
        if (c.contains("spsa_shots")) cfg.spsa_shots = c.at("spsa_shots").get<std::uint64_t>();
        if (c.contains("spsa_samples"))
            cfg.spsa_samples = c.at("spsa_samples").get<std::uint64_t>();
        if (c.contains("markov_paths"))
            cfg.markov_paths = c.at("markov_paths").get<std::uint64_t>();
    }
    if (j.contains("gate_set")) cfg.gate_set = j.at("gate_set").get<std::vector<std::string>>();
    if (j.contains("max_gates")) cfg.max_gates = j.at("max_gates").get<int>();
    if (const char* env = std::getenv("GENTLEGRAD_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
    cfg.validate();
    return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["method"] = cfg.method;
    if (!cfg.model_path.empty()) j["model"] = cfg.model_path;
    j["n"] = cfg.n;
    j["M"] = cfg.m_params;
    j["epsilon"] = cfg.epsilon;
    j["delta"] = cfg.delta;
    j["seed"] = cfg.seed;
    j["repeats"] = cfg.repeats;
    j["constants"] = {{"kappa_r", cfg.kappa_r},
                      {"kappa_0", cfg.kappa_0},
                      {"kappa_refine", cfg.kappa_refine},
                      {"kappa_b", cfg.kappa_b},
                      {"kappa_s", cfg.kappa_s},
                      {"eta", cfg.eta},
                      {"c", cfg.spsa_c},
                      {"spsa_shots", cfg.spsa_shots},
                      {"spsa_samples", cfg.spsa_samples},
                      {"markov_paths", cfg.markov_paths}};
    j["gate_set"] = cfg.gate_set;
    j["max_gates"] = cfg.max_gates;
    return j;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_config: cannot open " + path);
    json j;
    in >> j;
    return config_from_json(j);
}

} // namespace gentlegrad::bench
