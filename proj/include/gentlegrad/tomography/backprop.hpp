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

#include "gentlegrad/models/gradient_state.hpp"
#include "gentlegrad/tomography/shadow_tomography.hpp"

namespace gentlegrad::tomography {

/// Protocol trace row for one threshold round.
struct BackpropTraceRow {
    int k;
    double a_k;
    bool flagged;
    double b_k;
    std::uint64_t batches_used;
    std::uint64_t gate_applications;
};

/// Online shadow-tomography backpropagation for QNN gradients: one gradient
/// state is advanced through the layers while the fixed ancilla-X observable
/// is threshold-checked against the hypothesis state, which is rotated in
/// lockstep. Estimates satisfy |b_k - (1/2) d_k QNN| <= eps with high
/// probability; gate applications grow linearly in the layer count.
models::GradientReport backprop_gradients(const models::LayeredModel& m,
                                          const qcore::StateVector& input, double eps,
                                          qcore::RngStream& rng,
                                          const TomographyConfig& cfg = {},
                                          std::vector<BackpropTraceRow>* trace = nullptr);

std::string backprop_trace_header();
std::string backprop_trace_row(const BackpropTraceRow& row);
void append_backprop_trace(const std::string& path, const std::vector<BackpropTraceRow>& rows);

} // namespace gentlegrad::tomography
