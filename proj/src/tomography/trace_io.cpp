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
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gentlegrad/tomography/backprop.hpp"

namespace gentlegrad::tomography {

std::string backprop_trace_header() {
    return "k,a_k,outcome,b_k,batches_used,gate_applications";
}

std::string backprop_trace_row(const BackpropTraceRow& row) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%s,%.17g,%llu,%llu", row.k, row.a_k,
                  row.flagged ? "flag" : "pass", row.b_k,
                  static_cast<unsigned long long>(row.batches_used),
                  static_cast<unsigned long long>(row.gate_applications));
    return buf;
}

void append_backprop_trace(const std::string& path, const std::vector<BackpropTraceRow>& rows) {
    const bool fresh = [&] {
        std::ifstream probe(path);
        return !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }();
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("append_backprop_trace: cannot open " + path);
    if (fresh) out << backprop_trace_header() << '\n';
    for (const auto& row : rows) out << backprop_trace_row(row) << '\n';
}

} // namespace gentlegrad::tomography
