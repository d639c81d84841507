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
#include "gentlegrad/shadows/identify.hpp"

#include <cmath>
#include <stdexcept>

namespace gentlegrad::shadows {

namespace {

std::vector<Gate> gate_instances(const std::vector<std::string>& gate_set, int n) {
    std::vector<Gate> out;
    for (const auto& name : gate_set) {
        if (name == "CNOT") {
            for (int c = 0; c < n; ++c)
                for (int t = 0; t < n; ++t)
                    if (c != t) out.push_back(Gate::cnot(c, t));
            continue;
        }
        for (int q = 0; q < n; ++q) {
            if (name == "H") out.push_back(Gate::h(q));
            else if (name == "S") out.push_back(Gate::s(q));
            else if (name == "Sdg") out.push_back(Gate::sdg(q));
            else if (name == "X") out.push_back(Gate::x(q));
            else if (name == "Y") out.push_back(Gate::y(q));
            else if (name == "Z") out.push_back(Gate::z(q));
            else throw std::invalid_argument("enumerate_circuits: unknown gate '" + name + "'");
        }
    }
    return out;
}

} // namespace

CandidateSet enumerate_circuits(const std::vector<std::string>& gate_set, int max_gates, int n,
                                std::size_t cap) {
    const auto instances = gate_instances(gate_set, n);
    // Raw sequence count: sum_{p<=max_gates} |instances|^p.
    double raw = 1.0;
    double layer = 1.0;
    for (int p = 1; p <= max_gates; ++p) {
        layer *= double(instances.size());
        raw += layer;
        if (raw > double(cap)) throw std::runtime_error("enumerate_circuits: enumeration cap exceeded");
    }

    CandidateSet set;
    auto try_add = [&](const qcore::GateList& circuit, const StateVector& state) {
        for (const auto& seen : set.states)
            if (std::norm(qcore::inner(seen, state)) >= 1.0 - 1e-8) return false;
        set.circuits.push_back(circuit);
        set.states.push_back(state);
        return true;
    };

    // Breadth-first over deduplicated states only: distinct states reached
    // in <= p gates generate the next layer, which covers all reachable
    // states (prefixes of minimal-length preparations are minimal).
    StateVector zero = StateVector::zero(n);
    try_add({}, zero);
    std::size_t frontier_begin = 0;
    for (int depth = 1; depth <= max_gates; ++depth) {
        const std::size_t frontier_end = set.states.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            const qcore::GateList base = set.circuits[i];
            for (const Gate& g : instances) {
                StateVector next = set.states[i];
                qcore::apply_gate(next, g);
                qcore::GateList circuit = base;
                circuit.push_back(g);
                try_add(circuit, next);
            }
        }
        frontier_begin = frontier_end;
    }
    return set;
}

IdentifyResult identify_circuit(const std::vector<std::string>& gate_set, int max_gates, int n,
                                const StateVector& psi, double eps, RngStream& rng,
                                const ShadowConfig& cfg) {
    if (psi.n() != n) throw std::invalid_argument("identify_circuit: state width mismatch");
    const CandidateSet set = enumerate_circuits(gate_set, max_gates, n);
    if (set.states.empty()) throw std::logic_error("identify_circuit: empty candidate set");

    IdentifyResult result;
    result.num_candidates = set.states.size();
    result.shadow_shots = shadow_count(static_cast<int>(set.states.size()), eps, cfg);
    const auto fidelities =
        clifford_shadow_fidelities(psi, set.states, result.shadow_shots, rng, &result.ledger, cfg);

    std::size_t best = 0;
    for (std::size_t i = 1; i < fidelities.size(); ++i)
        if (fidelities[i] > fidelities[best]) best = i;
    result.circuit = set.circuits[best];
    result.state = set.states[best];
    result.estimated_fidelity = fidelities[best];
    return result;
}

} // namespace gentlegrad::shadows
