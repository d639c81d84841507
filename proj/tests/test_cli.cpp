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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks of the installed CLI binary (path injected by CMake).

#ifndef GENTLEGRAD_CLI_PATH
#define GENTLEGRAD_CLI_PATH "gentlegrad"
#endif

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string cli = GENTLEGRAD_CLI_PATH;

} // namespace

TEST_CASE("cost-table subcommand is byte-stable") {
    const auto a = run_command(cli + " cost-table --tq-ms 1 --m 10,100,1000,10000");
    const auto b = run_command(cli + " cost-table --tq-ms 1 --m 10,100,1000,10000");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("100000000") != std::string::npos); // M=10^4, Tq=1ms
}

TEST_CASE("run subcommand: determinism and exit codes") {
    const std::string cfg_path = "/tmp/gentlegrad_cli_cfg.json";
    const std::string out_a = "/tmp/gentlegrad_cli_a.csv";
    const std::string out_b = "/tmp/gentlegrad_cli_b.csv";
    std::filesystem::remove(out_a);
    std::filesystem::remove(out_b);
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"method":"shadow-backprop","n":2,"M":6,"epsilon":0.15,"seed":33,"repeats":2})";
    }
    const std::string env = "GENTLEGRAD_FIXED_WALL=1 ";
    CHECK(run_command(env + cli + " run --config " + cfg_path + " --out " + out_a).exit_code == 0);
    CHECK(run_command(env + cli + " run --config " + cfg_path + " --out " + out_b).exit_code == 0);
    CHECK(slurp(out_a) == slurp(out_b));
    CHECK(slurp(out_a).find("schema_version") == 0);

    SUBCASE("report subcommand consumes run output") {
        // Add more M values so the fit has three points.
        for (int m : {12, 24}) {
            std::ofstream cfg(cfg_path);
            cfg << R"({"method":"shadow-backprop","n":2,"M":)" << m
                << R"(,"epsilon":0.15,"seed":33,"repeats":1})";
            cfg.close();
            CHECK(run_command(env + cli + " run --config " + cfg_path + " --out " + out_a)
                      .exit_code == 0);
        }
        const auto rep = run_command(cli + " report --in " + out_a);
        CHECK(rep.exit_code == 0);
        CHECK(rep.output.find("shadow-backprop") != std::string::npos);
    }

    SUBCASE("validation failure exits with 2") {
        std::ofstream cfg(cfg_path);
        cfg << R"({"method":"warpdrive","n":2,"M":4,"epsilon":0.1,"seed":1,"repeats":1})";
        cfg.close();
        const auto res = run_command(cli + " run --config " + cfg_path + " --out " + out_a);
        CHECK(res.exit_code == 2);
    }

    SUBCASE("resource-cap failure exits with 3") {
        std::ofstream cfg(cfg_path);
        cfg << R"({"method":"identify","n":3,"M":4,"epsilon":0.2,"seed":1,"repeats":1,)"
            << R"("gate_set":["H","S","CNOT"],"max_gates":12})";
        cfg.close();
        const auto res = run_command(cli + " run --config " + cfg_path + " --out " + out_a);
        CHECK(res.exit_code == 3);
    }
    std::filesystem::remove(out_a);
    std::filesystem::remove(out_b);
}
