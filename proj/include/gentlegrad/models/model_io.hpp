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

#include "gentlegrad/models/model.hpp"

// JSON model documents: {"n", "kind", "layers": [{"gates": [...],
// "generator": "YZ..I"}], "theta": [...], "observable": "Z0"}. Gates are
// {"name": "H"|"S"|"Sdg"|"X"|"Y"|"Z", "qubits": [q]}, {"name": "CNOT",
// "qubits": [control, target]} or {"name": "ROT", "generator": word,
// "angle": radians}. Observables accept either a letter-index shorthand
// ("Z0") or a full word ("Z..."). See docs/model_schema.md.

namespace gentlegrad::models {

nlohmann::json gate_to_json(const qcore::Gate& g);
qcore::Gate gate_from_json(const nlohmann::json& j, int width);

/// Parses "Z0"-style shorthand or a full Pauli word of the given width.
PauliString observable_from_string(const std::string& text, int width);

nlohmann::json model_to_json(const LayeredModel& m);
LayeredModel model_from_json(const nlohmann::json& j);

LayeredModel load_model(const std::string& path);
void save_model(const LayeredModel& m, const std::string& path);

} // namespace gentlegrad::models
