// Copyright 2026 The BPMN Analyzer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "bpmn/diagnosis.hpp"
#include "bpmn/generators.hpp"
#include "bpmn/model.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bpmn {

constexpr std::size_t kMinRepetitions = 10;

/// A named model source. `load` runs outside the timed region, so parsing
/// and generation never count towards the runtime.
struct BenchModel {
    std::string name;
    std::string params;
    std::function<CollaborationModel()> load;
};

/// The eight parallel-branch configurations of the reference table.
std::vector<BranchParams> default_branch_rows();

std::vector<BenchModel> branches_suite(const std::vector<BranchParams>& rows = default_branch_rows());

/// `count` members evenly spaced between `from` and `to` elements (inclusive).
std::vector<BenchModel> growing_suite(std::size_t from = 5, std::size_t to = 4000,
                                      std::size_t count = 10);

/// Every *.bpmn file of `dir`, sorted by name. Throws std::invalid_argument
/// when the directory is missing or holds no such file.
std::vector<BenchModel> directory_suite(const std::filesystem::path& dir, bool lenient = false);

struct BenchRow {
    std::string model;
    std::string params;
    std::size_t states = 0;
    double mean_us = 0;
    double stddev_us = 0;
    std::size_t reps = 0;
    /// Set when loading or analysis failed; the other figures are then zero.
    std::optional<std::string> error;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    bool any_failed() const;
    std::string to_text() const;
    /// Header: model,params,states,mean_us,stddev_us,reps
    std::string to_csv() const;
};

using BenchClock = std::function<std::chrono::nanoseconds()>;

/// steady_clock since epoch.
BenchClock monotonic_clock();

/// Diagnoses every model `repetitions` times and records mean and sample
/// standard deviation. Failures are recorded per row. Throws
/// std::invalid_argument when `repetitions` < kMinRepetitions.
BenchReport run_benchmark(const std::vector<BenchModel>& models, std::size_t repetitions,
                          const DiagnoseOptions& options = {},
                          const BenchClock& clock = monotonic_clock());

}  // namespace bpmn
