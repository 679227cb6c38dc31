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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwork::app {

/// Bad or missing configuration; the CLI exits with status 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parsed experiment configuration. The file is INI-style:
///
///   [experiment]
///   name   = sweep
///   seed   = 42
///   output = sweep.csv
///
///   [parameters]
///   L = 100
///   r_grid = 0.05:0.95:0.05
struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 0;
    std::string output_path;  // empty: derived from the experiment name
    std::map<std::string, std::string> parameters;

    bool has(const std::string& key) const { return parameters.count(key) != 0; }
    std::string get_string(const std::string& key, const std::optional<std::string>& fallback = {}) const;
    double get_double(const std::string& key, const std::optional<double>& fallback = {}) const;
    std::size_t get_size(const std::string& key, const std::optional<std::size_t>& fallback = {}) const;
    bool get_bool(const std::string& key, const std::optional<bool>& fallback = {}) const;
    /// "start:stop:step" (inclusive of stop up to rounding) or "a,b,c".
    std::vector<double> get_grid(const std::string& key, const std::optional<std::string>& fallback = {}) const;
};

/// Applies `key=value` overrides; a bare key targets [parameters], while
/// experiment.name / experiment.seed / experiment.output target the header.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

std::vector<double> parse_grid(const std::string& text);
double parse_double(const std::string& key, const std::string& text);

}  // namespace qwork::app
