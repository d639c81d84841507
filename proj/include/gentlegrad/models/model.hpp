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

#include <string>
#include <vector>

#include "gentlegrad/ledger.hpp"
#include "gentlegrad/qcore/gates.hpp"
#include "gentlegrad/qcore/state.hpp"

namespace gentlegrad::models {

using qcore::GateList;
using qcore::PauliString;
using qcore::RngStream;
using qcore::StateVector;

enum class ModelKind { SimpleVariational, Qnn };

/// One parameterized layer: a fixed circuit followed by a Pauli rotation.
struct Layer {
    GateList fixed;          // may be empty (identity)
    PauliString generator;   // full register width
};

/// Layered variational model.
///
/// SimpleVariational: register = the n data qubits, layer j applies
///   exp(-i theta_j P_j) U_j, and the model value is <O>.
/// Qnn: register = output qubit 0 plus data qubits 1..n, layer j applies
///   exp(+i theta_j P_j) U_j, the observable is fixed to Z on qubit 0, and
///   the output qubit starts in |0>.
class LayeredModel {
  public:
    LayeredModel() = default;
    LayeredModel(ModelKind kind, int n_data, std::vector<Layer> layers,
                 std::vector<double> theta, PauliString observable);

    static LayeredModel simple(int n_data, std::vector<Layer> layers, std::vector<double> theta,
                               PauliString observable);
    static LayeredModel qnn(int n_data, std::vector<Layer> layers, std::vector<double> theta);

    ModelKind kind() const { return kind_; }
    int n_data() const { return n_data_; }
    /// Register width the circuit acts on (n or n+1).
    int width() const { return kind_ == ModelKind::Qnn ? n_data_ + 1 : n_data_; }
    int num_layers() const { return static_cast<int>(layers_.size()); }
    const std::vector<Layer>& layers() const { return layers_; }
    const Layer& layer(int j) const { return layers_[j]; }
    const std::vector<double>& theta() const { return theta_; }
    std::vector<double>& theta() { return theta_; }
    const PauliString& observable() const { return observable_; }

    /// Rotation convention: layers are exp(sign * i * theta * P).
    double rotation_sign() const { return kind_ == ModelKind::Qnn ? +1.0 : -1.0; }

    /// Applies layer j (fixed circuit, then rotation) at angle `theta`.
    void apply_layer(StateVector& s, int j, double theta, qcore::ControlSpec ctrl = {}) const;
    void apply_layer_inverse(StateVector& s, int j, double theta,
                             qcore::ControlSpec ctrl = {}) const;

    /// Prepares the full register from a data-register input.
    StateVector prepare(const StateVector& input) const;

  private:
    ModelKind kind_ = ModelKind::SimpleVariational;
    int n_data_ = 0;
    std::vector<Layer> layers_;
    std::vector<double> theta_;
    PauliString observable_;
};

struct GradientReport {
    std::vector<double> values;
    std::string method;
    CopyLedger ledger;
    double epsilon = 0.0;
};

/// Exact F(theta) = <O> (simple) or QNN value (QNN); no sampling noise.
double evaluate_model(const LayeredModel& m, const StateVector& input);

/// All M partial derivatives from one forward and one backward sweep;
/// state-mutating gate applications stay within 4x a forward evaluation.
GradientReport exact_gradient(const LayeredModel& m, const StateVector& input);

/// Two-term parameter-shift rule at +-pi/4 with exact expectations.
GradientReport parameter_shift_gradient(const LayeredModel& m, const StateVector& input);

/// Random model with Pauli-word generators, uniform angles in (-pi, pi) and
/// short random Clifford fixed circuits (fixed_gates_per_layer gates each).
LayeredModel random_model(ModelKind kind, int n_data, int m_layers, RngStream& rng,
                          int fixed_gates_per_layer = 2);

} // namespace gentlegrad::models
