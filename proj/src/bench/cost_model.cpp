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
#include "gentlegrad/bench/cost_model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gentlegrad::bench {

std::vector<CostRow> cost_model_table(double tq_ms, const std::vector<double>& m_list,
                                      int polylog_exponent) {
    if (tq_ms <= 0.0) throw std::invalid_argument("cost_model_table: Tq must be positive");
    if (m_list.empty()) throw std::invalid_argument("cost_model_table: empty M list");
    std::vector<CostRow> rows;
    rows.reserve(m_list.size());
    for (double m : m_list) {
        const double lg = std::max(std::log(m), 1.0);
        rows.push_back({m, m * m * tq_ms, m * std::pow(lg, polylog_exponent) * tq_ms});
    }
    return rows;
}

double paramshift_crossover_m(double tq_ms, double budget_hours) {
    if (tq_ms <= 0.0 || budget_hours <= 0.0)
        throw std::invalid_argument("paramshift_crossover_m: positive inputs required");
    const double budget_ms = budget_hours * 3600.0 * 1000.0;
    return std::ceil(std::sqrt(budget_ms / tq_ms));
}

std::string cost_table_csv(const std::vector<CostRow>& rows) {
    std::ostringstream out;
    out << "M,t_paramshift_ms,t_backprop_ms\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", r.m_params, r.t_paramshift_ms,
                      r.t_backprop_ms);
        out << buf;
    }
    return out.str();
}

} // namespace gentlegrad::bench
