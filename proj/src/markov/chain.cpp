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

namespace {

// dist <- lifted(local) * dist, iterating configurations of the other bits.
void apply_local(std::vector<double>& dist, const StochasticChain& c, int j,
                 const Eigen::MatrixXd& local, bool transpose) {
    const auto& support = c.gate(j).support;
    const int k = static_cast<int>(support.size());
    const int block = 1 << k;
    std::vector<double> scratch(block);
    const std::size_t dim = dist.size();
    // Enumerate base configs with all support bits clear.
    std::uint64_t support_mask = 0;
    for (int b : support) support_mask |= 1ull << b;
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & support_mask) continue;
        for (int loc = 0; loc < block; ++loc) scratch[loc] = dist[c.write_local(j, base, loc)];
        for (int out = 0; out < block; ++out) {
            double acc = 0.0;
            for (int in = 0; in < block; ++in)
                acc += (transpose ? local(in, out) : local(out, in)) * scratch[in];
            dist[c.write_local(j, base, out)] = acc;
        }
    }
}

} // namespace

void validate_generator(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("generator: must be square");
    for (Eigen::Index col = 0; col < h.cols(); ++col) {
        double sum = 0.0;
        for (Eigen::Index row = 0; row < h.rows(); ++row) {
            sum += h(row, col);
            if (row != col && h(row, col) < -1e-12)
                throw std::invalid_argument("generator: negative off-diagonal entry");
            if (std::abs(h(row, col)) > 1.0 + 1e-12)
                throw std::invalid_argument("generator: entry norm above 1");
        }
        if (std::abs(sum) > 1e-10)
            throw std::invalid_argument("generator: column sums must vanish");
    }
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    Eigen::MatrixXd scaled = a;
    while (norm / std::pow(2.0, squarings) > 0.5) ++squarings;
    scaled /= std::pow(2.0, squarings);
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd term = result;
    for (int k = 1; k <= 24; ++k) {
        term = (term * scaled) / double(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

StochasticChain::StochasticChain(int n_bits, std::vector<LocalGate> gates,
                                 std::vector<double> initial, std::vector<double> observable)
    : n_bits_(n_bits), gates_(std::move(gates)), initial_(std::move(initial)),
      observable_(std::move(observable)) {
    if (n_bits_ < 1 || n_bits_ > 16)
        throw std::invalid_argument("StochasticChain: bit count outside [1, 16]");
    const std::size_t d = dim();
    if (initial_.size() != d) throw std::invalid_argument("StochasticChain: bad initial size");
    double mass = 0.0;
    for (double p : initial_) {
        if (p < -1e-12) throw std::invalid_argument("StochasticChain: negative initial entry");
        mass += p;
    }
    if (std::abs(mass - 1.0) > 1e-9)
        throw std::invalid_argument("StochasticChain: initial distribution must sum to 1");
    if (observable_.size() != d)
        throw std::invalid_argument("StochasticChain: bad observable size");
    for (double o : observable_)
        if (std::abs(o) > 1.0 + 1e-12)
            throw std::invalid_argument("StochasticChain: observable entries must be in [-1,1]");
    for (const auto& g : gates_) {
        if (g.support.empty() || g.support.size() > 2)
            throw std::invalid_argument("StochasticChain: gate support must be 1 or 2 bits");
        for (int b : g.support)
            if (b < 0 || b >= n_bits_)
                throw std::invalid_argument("StochasticChain: support bit out of range");
        if (g.support.size() == 2 && g.support[0] == g.support[1])
            throw std::invalid_argument("StochasticChain: repeated support bit");
        if (g.generator.rows() != (1 << g.support.size()))
            throw std::invalid_argument("StochasticChain: generator size mismatch");
        validate_generator(g.generator);
        if (g.theta < 0.0)
            throw std::invalid_argument("StochasticChain: negative theta breaks stochasticity");
    }
    transitions_.resize(gates_.size());
    derivatives_.resize(gates_.size());
    cached_.assign(gates_.size(), false);
}

const Eigen::MatrixXd& StochasticChain::transition(int j) const {
    if (!cached_[j]) {
        transitions_[j] = expm(gates_[j].theta * gates_[j].generator);
        derivatives_[j] = gates_[j].generator * transitions_[j];
        cached_[j] = true;
    }
    return transitions_[j];
}

const Eigen::MatrixXd& StochasticChain::transition_derivative(int j) const {
    transition(j);
    return derivatives_[j];
}

int StochasticChain::local_index(int j, std::uint64_t config) const {
    const auto& support = gates_[j].support;
    int loc = 0;
    for (std::size_t b = 0; b < support.size(); ++b)
        loc |= int((config >> support[b]) & 1) << b;
    return loc;
}

std::uint64_t StochasticChain::write_local(int j, std::uint64_t config, int local) const {
    const auto& support = gates_[j].support;
    std::uint64_t out = config;
    for (std::size_t b = 0; b < support.size(); ++b) {
        const std::uint64_t bit = 1ull << support[b];
        if ((local >> b) & 1) out |= bit;
        else out &= ~bit;
    }
    return out;
}

double markov_evaluate(const StochasticChain& c, ChainCosts* costs) {
    std::vector<double> dist = c.initial();
    for (int j = 0; j < c.num_gates(); ++j) {
        apply_local(dist, c, j, c.transition(j), false);
        if (costs) ++costs->ops;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) acc += c.observable()[i] * dist[i];
    return acc;
}

std::vector<double> markov_exact_gradient(const StochasticChain& c, ChainCosts* costs) {
    const int n_gates = c.num_gates();
    // Forward pass with cached distributions psi_0 .. psi_N.
    std::vector<std::vector<double>> cache(n_gates + 1);
    cache[0] = c.initial();
    for (int j = 0; j < n_gates; ++j) {
        cache[j + 1] = cache[j];
        apply_local(cache[j + 1], c, j, c.transition(j), false);
        if (costs) ++costs->ops;
    }
    // Backward row sweep: w_j^T = O^T prod_{l > j} U_l.
    std::vector<double> w(c.observable());
    std::vector<double> grad(n_gates, 0.0);
    for (int j = n_gates - 1; j >= 0; --j) {
        // grad_j = w^T H_j psi_j  (H_j U_j psi_{j-1} = H_j psi_j).
        std::vector<double> hp = cache[j + 1];
        apply_local(hp, c, j, c.gate(j).generator, false);
        if (costs) ++costs->ops;
        double acc = 0.0;
        for (std::size_t i = 0; i < hp.size(); ++i) acc += w[i] * hp[i];
        grad[j] = acc;
        apply_local(w, c, j, c.transition(j), true);
        if (costs) ++costs->ops;
    }
    return grad;
}

} // namespace gentlegrad::markov
