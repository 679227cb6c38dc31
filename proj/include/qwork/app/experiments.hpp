// Copyright 2026 The qwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwork/app/config.hpp"

namespace qwork::app {

struct ParamInfo {
    std::string name;
    std::optional<std::string> default_value;  // nullopt: required
    std::string description;
};

struct ExperimentInfo {
    std::string name;
    std::string summary;
    std::string extension;  // "csv" or "json"
    std::vector<ParamInfo> params;
};

const std::vector<ExperimentInfo>& experiment_catalog();
const ExperimentInfo* find_experiment(const std::string& name);

/// Names, required parameters and defaults of every experiment.
std::string list_experiments_text();

/// A validated experiment ready to run. All parameter checks happen while
/// building it, so a config error never leaves partial work behind.
struct PreparedExperiment {
    std::string name;
    std::string output_path;  // resolved
    std::function<std::string(std::string& summary_json)> execute;
};

/// Throws ConfigError for unknown experiments, unknown or missing keys and
/// out-of-range values.
PreparedExperiment prepare_experiment(const ExperimentConfig& cfg, std::size_t workers);

/// Echo of the effective configuration, as it goes into the manifest.
std::string config_echo_json(const ExperimentConfig& cfg);

struct RunRequest {
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitIoError = 1;

/// Loads, validates and runs one experiment, then writes its data file and a
/// `<output>.manifest.json` next to it. Returns the process exit code.
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qwork::app
