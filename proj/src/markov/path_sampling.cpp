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
#include "gentlegrad/markov/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace gentlegrad::markov {

SamplePath sample_path(const StochasticChain& c, RngStream& rng) {
    SamplePath path;
    path.configs.reserve(c.num_gates() + 1);
    // Initial draw.
    double u = rng.uniform();
    std::uint64_t config = c.dim() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        acc += c.initial()[i];
        if (u < acc) {
            config = i;
            break;
        }
    }
    path.log_probability = std::log(std::max(c.initial()[config], 1e-300));
    path.configs.push_back(config);

    for (int j = 0; j < c.num_gates(); ++j) {
        const auto& u_j = c.transition(j);
        const int in = c.local_index(j, config);
        const int block = static_cast<int>(u_j.rows());
        double draw = rng.uniform();
        int out = block - 1;
        double cum = 0.0;
        for (int cand = 0; cand < block; ++cand) {
            cum += std::max(u_j(cand, in), 0.0);
            if (draw < cum) {
                out = cand;
                break;
            }
        }
        path.log_probability += std::log(std::max(u_j(out, in), 1e-300));
        config = c.write_local(j, config, out);
        path.configs.push_back(config);
    }
    return path;
}

double path_gradient_sample(const StochasticChain& c, const SamplePath& path, int j) {
    if (j < 0 || j >= c.num_gates()) throw std::out_of_range("path_gradient_sample: gate index");
    const int in = c.local_index(j, path.configs[j]);
    const int out = c.local_index(j, path.configs[j + 1]);
    const double den = c.transition(j)(out, in);
    if (den <= 0.0)
        throw std::domain_error("path_gradient_sample: zero-probability transition");
    const double num = c.transition_derivative(j)(out, in);
    const double o_final = c.observable()[path.configs.back()];
    return (num / den) * o_final;
}

MarkovEstimate markov_backprop_estimate(const StochasticChain& c, std::uint64_t num_paths,
                                        RngStream& rng) {
    if (num_paths == 0) throw std::invalid_argument("markov_backprop_estimate: need paths");
    const int n_gates = c.num_gates();
    MarkovEstimate est;
    est.paths = num_paths;
    est.gradient.assign(n_gates, 0.0);
    est.std_error.assign(n_gates, 0.0);
    std::vector<double> sumsq(n_gates, 0.0);
    for (std::uint64_t p = 0; p < num_paths; ++p) {
        const SamplePath path = sample_path(c, rng);
        for (int j = 0; j < n_gates; ++j) {
            const double s = path_gradient_sample(c, path, j);
            est.gradient[j] += s;
            sumsq[j] += s * s;
        }
    }
    for (int j = 0; j < n_gates; ++j) {
        est.gradient[j] /= double(num_paths);
        const double var =
            std::max(0.0, sumsq[j] / double(num_paths) - est.gradient[j] * est.gradient[j]);
        est.std_error[j] = std::sqrt(var / double(num_paths));
    }
    return est;
}

} // namespace gentlegrad::markov
