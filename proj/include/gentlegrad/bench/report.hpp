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

#include "gentlegrad/bench/runner.hpp"

namespace gentlegrad::bench {

struct MethodScaling {
    std::string method;
    int points = 0;              // distinct M values
    double copies_exponent = 0.0;
    double copies_ci = 0.0;      // ~95% half width
    double gates_exponent = 0.0;
    double gates_ci = 0.0;
};

/// Log-log regression of copies and gate counts against M, one fit per
/// method. Repeats at the same M are geometric-mean-pooled first. Methods
/// with fewer than 3 distinct M values are rejected.
std::vector<MethodScaling> emit_scaling_report(const std::vector<ResultRow>& rows);

std::string scaling_report_text(const std::vector<MethodScaling>& report);

} // namespace gentlegrad::bench
