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
#include "gentlegrad/models/model_io.hpp"

#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gentlegrad::models {

using nlohmann::json;
using qcore::Gate;

json gate_to_json(const Gate& g) {
    json j;
    j["name"] = g.name();
    if (g.kind == Gate::Kind::Rot) {
        j["generator"] = g.word.str();
        j["angle"] = g.angle;
    } else if (g.kind == Gate::Kind::Cnot) {
        j["qubits"] = {g.q0, g.q1};
    } else {
        j["qubits"] = {g.q0};
    }
    return j;
}

Gate gate_from_json(const json& j, int width) {
    const std::string name = j.at("name").get<std::string>();
    if (name == "ROT") {
        PauliString word = PauliString::parse(j.at("generator").get<std::string>());
        if (word.n != width) throw std::invalid_argument("gate: ROT word width mismatch");
        return Gate::rot(std::move(word), j.at("angle").get<double>());
    }
    const auto qubits = j.at("qubits").get<std::vector<int>>();
    if (name == "CNOT") {
        if (qubits.size() != 2) throw std::invalid_argument("gate: CNOT needs two qubits");
        return Gate::cnot(qubits[0], qubits[1]);
    }
    if (qubits.size() != 1) throw std::invalid_argument("gate: expected one qubit");
    const int q = qubits[0];
    if (name == "H") return Gate::h(q);
    if (name == "S") return Gate::s(q);
    if (name == "Sdg") return Gate::sdg(q);
    if (name == "X") return Gate::x(q);
    if (name == "Y") return Gate::y(q);
    if (name == "Z") return Gate::z(q);
    throw std::invalid_argument("gate: unknown name '" + name + "'");
}

PauliString observable_from_string(const std::string& text, int width) {
    if (text.size() >= 2 && std::isdigit(static_cast<unsigned char>(text[1]))) {
        const char letter = text[0];
        const int q = std::stoi(text.substr(1));
        return PauliString::single(width, q, letter);
    }
    PauliString p = PauliString::parse(text);
    if (p.n != width) throw std::invalid_argument("observable: width mismatch");
    return p;
}

json model_to_json(const LayeredModel& m) {
    json j;
    j["n"] = m.n_data();
    j["kind"] = (m.kind() == ModelKind::Qnn) ? "qnn" : "simple";
    j["theta"] = m.theta();
    j["observable"] = m.observable().str();
    json layers = json::array();
    for (const Layer& l : m.layers()) {
        json jl;
        jl["generator"] = l.generator.str();
        json gates = json::array();
        for (const Gate& g : l.fixed) gates.push_back(gate_to_json(g));
        jl["gates"] = std::move(gates);
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    return j;
}

LayeredModel model_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const std::string kind_str = j.at("kind").get<std::string>();
    ModelKind kind;
    if (kind_str == "qnn") kind = ModelKind::Qnn;
    else if (kind_str == "simple") kind = ModelKind::SimpleVariational;
    else throw std::invalid_argument("model: kind must be 'qnn' or 'simple'");

    const int width = (kind == ModelKind::Qnn) ? n + 1 : n;
    std::vector<Layer> layers;
    for (const json& jl : j.at("layers")) {
        Layer l;
        l.generator = PauliString::parse(jl.at("generator").get<std::string>());
        if (jl.contains("gates"))
            for (const json& jg : jl.at("gates")) l.fixed.push_back(gate_from_json(jg, width));
        layers.push_back(std::move(l));
    }
    auto theta = j.at("theta").get<std::vector<double>>();

    if (kind == ModelKind::Qnn) return LayeredModel::qnn(n, std::move(layers), std::move(theta));
    PauliString obs = observable_from_string(j.at("observable").get<std::string>(), width);
    return LayeredModel::simple(n, std::move(layers), std::move(theta), std::move(obs));
}

LayeredModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_model: cannot open " + path);
    json j;
    in >> j;
    return model_from_json(j);
}

void save_model(const LayeredModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_model: cannot open " + path);
    out << model_to_json(m).dump(2) << '\n';
}

} // namespace gentlegrad::models
