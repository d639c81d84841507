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

#include "gentlegrad/bench/config.hpp"
#include "gentlegrad/ledger.hpp"
#include "gentlegrad/tomography/backprop.hpp"

namespace gentlegrad::bench {

inline constexpr int kCsvSchemaVersion = 1;

struct ResultRow {
    std::string method;
    int n = 0;
    int m_params = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t copies_used = 0;
    std::uint64_t batches_used = 0;
    std::uint64_t gate_applications = 0;
    std::uint64_t destructive_shots = 0;
    std::uint64_t wall_ms = 0;
    double max_abs_error = 0.0;
};

/// Runs one config: one row per repeat, seeded with seed + repeat index.
/// max_abs_error is always measured against the exact oracle for the method
/// (cross-route for the exact methods themselves). Deterministic given the
/// seed; wall_ms is zeroed under GENTLEGRAD_FIXED_WALL=1. shadow-backprop
/// runs append their per-k protocol rows to `trace` when provided.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      std::vector<tomography::BackpropTraceRow>* trace = nullptr);

std::string csv_header();
std::string csv_row(const ResultRow& row);

/// Appends rows, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const std::vector<ResultRow>& rows);

std::vector<ResultRow> read_csv(const std::string& path);

} // namespace gentlegrad::bench
