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

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace gentlegrad::bench {

/// One experiment descriptor; JSON field names match the struct fields.
/// The GENTLEGRAD_SEED environment variable overrides `seed`.
struct ExperimentConfig {
    std::string method;     // exact | paramshift | paramshift-shots | spsa |
                            // shadow-backprop | pauli-gentle | ideal-gentle |
                            // markov | identify
    std::string model_path; // empty: a seeded random model/chain is generated
    int n = 3;
    int m_params = 8;
    double epsilon = 0.1;
    double delta = 0.05;
    std::uint64_t seed = 1;
    int repeats = 1;

    // Constant overrides (defaults match the library).
    double kappa_r = 8.0;
    double kappa_0 = 16.0;
    double kappa_refine = 40.0;
    double kappa_b = 4.0;
    double kappa_s = 24.0;
    double eta = 0.0;    // 0 -> eps/4
    double spsa_c = 0.1;
    std::uint64_t spsa_shots = 0;
    std::uint64_t spsa_samples = 1000;
    std::uint64_t markov_paths = 0; // 0 -> ceil(16/eps^2)
    std::vector<std::string> gate_set = {"H", "S", "CNOT"};
    int max_gates = 3;

    void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

} // namespace gentlegrad::bench
