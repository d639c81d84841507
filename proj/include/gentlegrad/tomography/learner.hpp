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

#include <vector>

#include "gentlegrad/qcore/density.hpp"
#include "gentlegrad/qcore/gates.hpp"

namespace gentlegrad::tomography {

using qcore::ControlledGates;
using qcore::DensityMatrix;
using qcore::PauliString;

/// Online learner over hypothesis states: matrix multiplicative weights with
/// an absolute-loss subgradient. The hypothesis starts maximally mixed; each
/// update accumulates sign(Tr(E w) - b) * E and re-normalizes
/// w = exp(-eta * accumulator) / Tr[...]. Rotations conjugate both the
/// hypothesis and the accumulator so later updates act in the current frame.
class OnlineLearner {
  public:
    OnlineLearner(int n_qubits, double eta);

    const DensityMatrix& omega() const { return omega_; }
    double eta() const { return eta_; }
    std::uint64_t mistakes() const { return mistakes_; }

    /// a = Tr(E omega), in [-1, 1] for a Pauli word.
    double predict(const PauliString& e) const;

    /// MMW step with target value b (|b| <= 1); increments mistakes.
    void update(const PauliString& e, double b);

    /// Conjugates hypothesis and accumulator by the controlled unitaries.
    void rotate(const std::vector<ControlledGates>& ops);

    /// Replaces the hypothesis state (diagnostics and plant-the-truth tests;
    /// the accumulator is reset so subsequent updates restart from here).
    void set_omega(const DensityMatrix& omega);

  private:
    void refresh_omega();

    int n_;
    double eta_;
    std::uint64_t mistakes_ = 0;
    DensityMatrix omega_;
    DensityMatrix accumulator_; // Hermitian loss accumulator, not a state
    bool omega_overridden_ = false;
};

} // namespace gentlegrad::tomography
