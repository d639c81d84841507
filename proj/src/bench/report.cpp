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
#include "gentlegrad/bench/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gentlegrad::bench {

namespace {

struct Fit {
    double slope = 0.0;
    double ci = 0.0;
};

// OLS on (ln M, ln y); ci is a ~95% half width from the residual variance.
Fit loglog_fit(const std::map<int, std::pair<double, int>>& pooled_log_y) {
    const int n = static_cast<int>(pooled_log_y.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [m, acc] : pooled_log_y) {
        const double x = std::log(double(m));
        const double y = acc.first / acc.second;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    Fit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / n;
    if (n > 2) {
        double ss_res = 0, ss_x = 0;
        const double mean_x = sx / n;
        for (const auto& [m, acc] : pooled_log_y) {
            const double x = std::log(double(m));
            const double y = acc.first / acc.second;
            const double resid = y - (intercept + fit.slope * x);
            ss_res += resid * resid;
            ss_x += (x - mean_x) * (x - mean_x);
        }
        fit.ci = 1.96 * std::sqrt(ss_res / (n - 2) / ss_x);
    }
    return fit;
}

} // namespace

std::vector<MethodScaling> emit_scaling_report(const std::vector<ResultRow>& rows) {
    // method -> M -> (sum of ln y, count), separately for copies and gates.
    std::map<std::string, std::map<int, std::pair<double, int>>> copies, gates;
    for (const auto& row : rows) {
        if (row.copies_used > 0) {
            auto& acc = copies[row.method][row.m_params];
            acc.first += std::log(double(row.copies_used));
            acc.second += 1;
        }
        if (row.gate_applications > 0) {
            auto& acc = gates[row.method][row.m_params];
            acc.first += std::log(double(row.gate_applications));
            acc.second += 1;
        }
    }

    std::vector<MethodScaling> report;
    std::map<std::string, bool> seen;
    for (const auto& row : rows) {
        if (seen[row.method]) continue;
        seen[row.method] = true;
        const auto& gate_points = gates[row.method];
        if (gate_points.size() < 3)
            throw std::invalid_argument("emit_scaling_report: need at least 3 distinct M for " +
                                        row.method);
        MethodScaling ms;
        ms.method = row.method;
        ms.points = static_cast<int>(gate_points.size());
        const Fit gf = loglog_fit(gate_points);
        ms.gates_exponent = gf.slope;
        ms.gates_ci = gf.ci;
        if (copies[row.method].size() >= 3) {
            const Fit cf = loglog_fit(copies[row.method]);
            ms.copies_exponent = cf.slope;
            ms.copies_ci = cf.ci;
        }
        report.push_back(std::move(ms));
    }
    return report;
}

std::string scaling_report_text(const std::vector<MethodScaling>& report) {
    std::ostringstream out;
    out << "method,points,copies_exponent,copies_ci,gates_exponent,gates_ci\n";
    char buf[256];
    for (const auto& ms : report) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%.4f,%.4f,%.4f,%.4f\n", ms.method.c_str(),
                      ms.points, ms.copies_exponent, ms.copies_ci, ms.gates_exponent, ms.gates_ci);
        out << buf;
    }
    return out.str();
}

} // namespace gentlegrad::bench
