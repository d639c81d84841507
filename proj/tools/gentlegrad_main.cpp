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
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "gentlegrad/bench/cost_model.hpp"
#include "gentlegrad/bench/report.hpp"
#include "gentlegrad/bench/runner.hpp"
#include "gentlegrad/qcore/kernels.hpp"
#include "gentlegrad/tomography/threshold.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitResourceCap = 3;

std::vector<double> parse_m_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gentlegrad: gradient-estimation workbench for variational quantum circuits"};
    app.require_subcommand(1);

    std::string config_path, out_path, in_path, m_csv = "10,100,1000,10000";
    double tq_ms = 1.0;
    int polylog = 2;
    bool print_backend = false;
    app.add_flag("--backend", print_backend, "print the active kernel backend and exit")
        ->group("");

    auto* run = app.add_subcommand("run", "run an experiment config, append rows to a CSV");
    run->add_option("--config", config_path, "experiment JSON")->required();
    run->add_option("--out", out_path, "output CSV path")->required();

    auto* cost = app.add_subcommand("cost-table", "print the wall-time cost-model table");
    cost->add_option("--tq-ms", tq_ms, "per-primitive time in milliseconds");
    cost->add_option("--m", m_csv, "comma-separated parameter counts");
    cost->add_option("--polylog", polylog, "polylog exponent for the backprop column");

    auto* report = app.add_subcommand("report", "fit scaling exponents from a result CSV");
    report->add_option("--in", in_path, "input CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    if (print_backend) {
        std::cout << gentlegrad::qcore::kernels::backend_name(
                         gentlegrad::qcore::kernels::active_backend())
                  << '\n';
        return 0;
    }

    try {
        if (run->parsed()) {
            const auto cfg = gentlegrad::bench::load_config(config_path);
            const auto rows = gentlegrad::bench::run_experiment(cfg);
            gentlegrad::bench::append_csv(out_path, rows);
            std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
            return 0;
        }
        if (cost->parsed()) {
            const auto rows =
                gentlegrad::bench::cost_model_table(tq_ms, parse_m_list(m_csv), polylog);
            std::cout << gentlegrad::bench::cost_table_csv(rows);
            return 0;
        }
        if (report->parsed()) {
            const auto rows = gentlegrad::bench::read_csv(in_path);
            const auto scaling = gentlegrad::bench::emit_scaling_report(rows);
            std::cout << gentlegrad::bench::scaling_report_text(scaling);
            return 0;
        }
    } catch (const gentlegrad::tomography::BatchExhausted& ex) {
        std::cerr << "resource cap: " << ex.what() << " (batches_used=" << ex.ledger.batches_used
                  << ", shots=" << ex.ledger.destructive_shots << ")\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "invalid input: " << ex.what() << '\n';
        return kExitValidation;
    } catch (const std::runtime_error& ex) {
        const std::string what = ex.what();
        if (what.find("cap exceeded") != std::string::npos) {
            std::cerr << "resource cap: " << what << '\n';
            return kExitResourceCap;
        }
        std::cerr << "error: " << what << '\n';
        return kExitValidation;
    }
    return 0;
}
