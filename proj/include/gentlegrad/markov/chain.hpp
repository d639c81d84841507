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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gentlegrad/qcore/rng.hpp"

namespace gentlegrad::markov {

using qcore::RngStream;

/// Parameterized stochastic gate: a local infinitesimal-stochastic generator
/// (columns sum to zero, non-negative off-diagonals, entries bounded by 1)
/// on one or two bits, applied as exp(theta * H) with theta >= 0.
struct LocalGate {
    std::vector<int> support; // 1 or 2 bit indices (bit 0 = LSB of configs)
    Eigen::MatrixXd generator;
    double theta = 0.0;
};

/// Classical tensor-product Markov process with a diagonal observable.
class StochasticChain {
  public:
    StochasticChain(int n_bits, std::vector<LocalGate> gates, std::vector<double> initial,
                    std::vector<double> observable);

    int n_bits() const { return n_bits_; }
    std::size_t dim() const { return std::size_t(1) << n_bits_; }
    int num_gates() const { return static_cast<int>(gates_.size()); }
    const LocalGate& gate(int j) const { return gates_[j]; }
    /// Mutable access drops the memoized transition matrices.
    std::vector<LocalGate>& gates() {
        cached_.assign(gates_.size(), false);
        return gates_;
    }
    const std::vector<double>& initial() const { return initial_; }
    const std::vector<double>& observable() const { return observable_; }

    /// Left-stochastic local transition matrix exp(theta H) of gate j.
    const Eigen::MatrixXd& transition(int j) const;
    /// H * exp(theta H) of gate j (the theta-derivative of the transition).
    const Eigen::MatrixXd& transition_derivative(int j) const;

    /// Local basis index of a configuration restricted to the gate support.
    int local_index(int j, std::uint64_t config) const;
    std::uint64_t write_local(int j, std::uint64_t config, int local) const;

  private:
    int n_bits_;
    std::vector<LocalGate> gates_;
    std::vector<double> initial_;
    std::vector<double> observable_;
    mutable std::vector<Eigen::MatrixXd> transitions_;
    mutable std::vector<Eigen::MatrixXd> derivatives_;
    mutable std::vector<bool> cached_;
};

/// Matrix exponential by scaling and squaring with a converged Taylor core;
/// exact enough for the <= 4x4 local blocks used here.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Validated helper: columns sum to zero, off-diagonals non-negative,
/// max |entry| <= 1.
void validate_generator(const Eigen::MatrixXd& h);

struct ChainCosts {
    std::uint64_t ops = 0; // local-gate applications to a distribution/vector
};

/// Exact expectation of the observable after the full chain.
double markov_evaluate(const StochasticChain& c, ChainCosts* costs = nullptr);

/// Adjoint-mode exact gradient: forward distributions cached, one backward
/// row sweep; ops stay within 4x a forward evaluation.
std::vector<double> markov_exact_gradient(const StochasticChain& c, ChainCosts* costs = nullptr);

struct SamplePath {
    std::vector<std::uint64_t> configs; // N+1 entries, configs[0] initial
    double log_probability = 0.0;
};

SamplePath sample_path(const StochasticChain& c, RngStream& rng);

/// Path-reweighting gradient sample for gate j:
///   (<i_j|H_j U_j|i_{j-1}> / <i_j|U_j|i_{j-1}>) * O(i_N).
double path_gradient_sample(const StochasticChain& c, const SamplePath& path, int j);

struct MarkovEstimate {
    std::vector<double> gradient;
    std::vector<double> std_error;
    std::uint64_t paths = 0;
};

/// Stored-trajectory estimator: every path yields one sample of every
/// gradient component.
MarkovEstimate markov_backprop_estimate(const StochasticChain& c, std::uint64_t num_paths,
                                        RngStream& rng);

} // namespace gentlegrad::markov
