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

namespace gentlegrad::bench {

struct CostRow {
    double m_params;
    double t_paramshift_ms; // M^2 * Tq
    double t_backprop_ms;   // M * max(ln M, 1)^polylog * Tq
};

/// Wall-time projections from the per-primitive time Tq (default 1 ms: a
/// hundred 10 us parameterized operations per primitive). The log factor is
/// clamped at 1 so M = 1 stays finite.
std::vector<CostRow> cost_model_table(double tq_ms, const std::vector<double>& m_list,
                                      int polylog_exponent = 2);

/// Smallest integer M whose parameter-shift projection exceeds the budget.
double paramshift_crossover_m(double tq_ms, double budget_hours);

std::string cost_table_csv(const std::vector<CostRow>& rows);

} // namespace gentlegrad::bench
