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

#include <stdexcept>

namespace gentlegrad::models {

LayeredModel::LayeredModel(ModelKind kind, int n_data, std::vector<Layer> layers,
                           std::vector<double> theta, PauliString observable)
    : kind_(kind), n_data_(n_data), layers_(std::move(layers)), theta_(std::move(theta)),
      observable_(std::move(observable)) {
    if (n_data_ <= 0) throw std::invalid_argument("LayeredModel: need at least one data qubit");
    if (layers_.size() != theta_.size())
        throw std::invalid_argument("LayeredModel: layer count must equal angle count");
    const int w = width();
    if (observable_.n != w) throw std::invalid_argument("LayeredModel: observable width mismatch");
    if (kind_ == ModelKind::Qnn &&
        observable_ != PauliString::single(w, 0, 'Z'))
        throw std::invalid_argument("LayeredModel: QNN observable must be Z on qubit 0");
    for (const Layer& l : layers_) {
        if (l.generator.n != w)
            throw std::invalid_argument("LayeredModel: generator width mismatch");
        for (const auto& g : l.fixed)
            if (g.kind == qcore::Gate::Kind::Rot && g.word.n != w)
                throw std::invalid_argument("LayeredModel: fixed-rotation width mismatch");
    }
}

LayeredModel LayeredModel::simple(int n_data, std::vector<Layer> layers,
                                  std::vector<double> theta, PauliString observable) {
    return LayeredModel(ModelKind::SimpleVariational, n_data, std::move(layers),
                        std::move(theta), std::move(observable));
}

LayeredModel LayeredModel::qnn(int n_data, std::vector<Layer> layers, std::vector<double> theta) {
    PauliString z0 = PauliString::single(n_data + 1, 0, 'Z');
    return LayeredModel(ModelKind::Qnn, n_data, std::move(layers), std::move(theta),
                        std::move(z0));
}

void LayeredModel::apply_layer(StateVector& s, int j, double theta,
                               qcore::ControlSpec ctrl) const {
    const Layer& l = layers_[j];
    qcore::apply_gate_list(s, l.fixed, ctrl);
    qcore::apply_pauli_rotation(s, l.generator, -rotation_sign() * theta, ctrl);
}

void LayeredModel::apply_layer_inverse(StateVector& s, int j, double theta,
                                       qcore::ControlSpec ctrl) const {
    const Layer& l = layers_[j];
    qcore::apply_pauli_rotation(s, l.generator, rotation_sign() * theta, ctrl);
    qcore::apply_gate_list(s, qcore::inverted(l.fixed), ctrl);
}

StateVector LayeredModel::prepare(const StateVector& input) const {
    if (input.n() != n_data_)
        throw std::invalid_argument("LayeredModel: input qubit count mismatch");
    if (kind_ == ModelKind::Qnn) return input.with_prepended_zeros(1);
    return input;
}

double evaluate_model(const LayeredModel& m, const StateVector& input) {
    StateVector s = m.prepare(input);
    for (int j = 0; j < m.num_layers(); ++j) m.apply_layer(s, j, m.theta()[j]);
    return qcore::expectation(s, m.observable());
}

LayeredModel random_model(ModelKind kind, int n_data, int m_layers, RngStream& rng,
                          int fixed_gates_per_layer) {
    const int w = (kind == ModelKind::Qnn) ? n_data + 1 : n_data;
    std::vector<Layer> layers(m_layers);
    std::vector<double> theta(m_layers);
    for (int j = 0; j < m_layers; ++j) {
        // Non-identity Pauli word, uniform letters.
        PauliString p;
        do {
            std::uint64_t x = 0, z = 0;
            for (int q = 0; q < w; ++q) {
                switch (rng.below(4)) {
                    case 1: x |= 1ull << q; break;
                    case 2: z |= 1ull << q; break;
                    case 3: x |= 1ull << q; z |= 1ull << q; break;
                    default: break;
                }
            }
            p = PauliString(w, x, z);
        } while (p.is_identity());
        layers[j].generator = p;
        for (int g = 0; g < fixed_gates_per_layer; ++g) {
            const int q = static_cast<int>(rng.below(w));
            switch (rng.below(3)) {
                case 0: layers[j].fixed.push_back(qcore::Gate::h(q)); break;
                case 1: layers[j].fixed.push_back(qcore::Gate::s(q)); break;
                default: {
                    if (w < 2) { layers[j].fixed.push_back(qcore::Gate::h(q)); break; }
                    int t = static_cast<int>(rng.below(w - 1));
                    if (t >= q) ++t;
                    layers[j].fixed.push_back(qcore::Gate::cnot(q, t));
                    break;
                }
            }
        }
        theta[j] = rng.uniform(-3.14159265358979323846, 3.14159265358979323846);
    }
    if (kind == ModelKind::Qnn) return LayeredModel::qnn(n_data, std::move(layers), std::move(theta));
    // Random non-identity observable word for the simple model.
    PauliString obs;
    do {
        std::uint64_t x = 0, z = 0;
        for (int q = 0; q < w; ++q) {
            switch (rng.below(4)) {
                case 1: x |= 1ull << q; break;
                case 2: z |= 1ull << q; break;
                case 3: x |= 1ull << q; z |= 1ull << q; break;
                default: break;
            }
        }
        obs = PauliString(w, x, z);
    } while (obs.is_identity());
    return LayeredModel::simple(n_data, std::move(layers), std::move(theta), std::move(obs));
}

} // namespace gentlegrad::models
