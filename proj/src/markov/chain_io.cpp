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
#include "gentlegrad/markov/chain_io.hpp"

#include <bit>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gentlegrad::markov {

using nlohmann::json;

namespace {

std::vector<double> initial_from_json(const json& j, int n_bits) {
    const std::size_t dim = std::size_t(1) << n_bits;
    const std::string type = j.at("type").get<std::string>();
    std::vector<double> out(dim, 0.0);
    if (type == "point") {
        out[j.at("index").get<std::uint64_t>()] = 1.0;
    } else if (type == "product") {
        const auto p1 = j.at("p1").get<std::vector<double>>();
        if (static_cast<int>(p1.size()) != n_bits)
            throw std::invalid_argument("chain: product initial needs one entry per bit");
        for (std::size_t cfg = 0; cfg < dim; ++cfg) {
            double p = 1.0;
            for (int b = 0; b < n_bits; ++b) p *= ((cfg >> b) & 1) ? p1[b] : 1.0 - p1[b];
            out[cfg] = p;
        }
    } else if (type == "values") {
        out = j.at("values").get<std::vector<double>>();
    } else {
        throw std::invalid_argument("chain: unknown initial type '" + type + "'");
    }
    return out;
}

std::vector<double> observable_from_json(const json& j, int n_bits) {
    const std::size_t dim = std::size_t(1) << n_bits;
    const std::string type = j.at("type").get<std::string>();
    std::vector<double> out(dim, 0.0);
    if (type == "parity") {
        for (std::size_t cfg = 0; cfg < dim; ++cfg)
            out[cfg] = (std::popcount(cfg) % 2) ? -1.0 : 1.0;
    } else if (type == "bit") {
        const int b = j.at("index").get<int>();
        for (std::size_t cfg = 0; cfg < dim; ++cfg) out[cfg] = ((cfg >> b) & 1) ? -1.0 : 1.0;
    } else if (type == "values") {
        out = j.at("values").get<std::vector<double>>();
    } else {
        throw std::invalid_argument("chain: unknown observable type '" + type + "'");
    }
    return out;
}

} // namespace

json chain_to_json(const StochasticChain& c) {
    json j;
    j["kind"] = "chain";
    j["n"] = c.n_bits();
    json layers = json::array();
    for (int g = 0; g < c.num_gates(); ++g) {
        const auto& gate = c.gate(g);
        json jl;
        jl["support"] = gate.support;
        json rows = json::array();
        for (Eigen::Index r = 0; r < gate.generator.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index col = 0; col < gate.generator.cols(); ++col)
                row.push_back(gate.generator(r, col));
            rows.push_back(std::move(row));
        }
        jl["generator"] = std::move(rows);
        jl["theta"] = gate.theta;
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    j["initial"] = {{"type", "values"}, {"values", c.initial()}};
    j["observable"] = {{"type", "values"}, {"values", c.observable()}};
    return j;
}

StochasticChain chain_from_json(const json& j) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != "chain")
        throw std::invalid_argument("chain: document kind must be 'chain'");
    const int n_bits = j.at("n").get<int>();
    std::vector<LocalGate> gates;
    for (const json& jl : j.at("layers")) {
        LocalGate g;
        g.support = jl.at("support").get<std::vector<int>>();
        const auto rows = jl.at("generator").get<std::vector<std::vector<double>>>();
        const auto dim = static_cast<Eigen::Index>(rows.size());
        g.generator.resize(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (static_cast<Eigen::Index>(rows[r].size()) != dim)
                throw std::invalid_argument("chain: generator must be square");
            for (Eigen::Index col = 0; col < dim; ++col) g.generator(r, col) = rows[r][col];
        }
        g.theta = jl.at("theta").get<double>();
        gates.push_back(std::move(g));
    }
    return StochasticChain(n_bits, std::move(gates), initial_from_json(j.at("initial"), n_bits),
                           observable_from_json(j.at("observable"), n_bits));
}

StochasticChain load_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_chain: cannot open " + path);
    json j;
    in >> j;
    return chain_from_json(j);
}

void save_chain(const StochasticChain& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_chain: cannot open " + path);
    out << chain_to_json(c).dump(2) << '\n';
}

} // namespace gentlegrad::markov
