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

#include "gentlegrad/markov/chain.hpp"

// Chain documents mirror the quantum model schema with the Pauli generator
// replaced by a local stochastic matrix; see docs/chain_schema.md.

namespace gentlegrad::markov {

nlohmann::json chain_to_json(const StochasticChain& c);
StochasticChain chain_from_json(const nlohmann::json& j);
StochasticChain load_chain(const std::string& path);
void save_chain(const StochasticChain& c, const std::string& path);

} // namespace gentlegrad::markov
