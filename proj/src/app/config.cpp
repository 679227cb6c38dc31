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

#include "qwork/app/config.hpp"

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qwork::app {
namespace {

namespace pt = boost::property_tree;

std::string trimmed(std::string s) {
    boost::algorithm::trim(s);
    return s;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || text.front() == '-') {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "' must be a non-negative integer, got '" + text + "'");
    }
}

}  // namespace

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "' must be a finite number, got '" + text + "'");
    }
}

std::vector<double> parse_grid(const std::string& raw) {
    const std::string text = trimmed(raw);
    if (text.empty()) {
        throw ConfigError("empty grid");
    }
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string part; std::getline(ss, part, ':');) {
            parts.push_back(trimmed(part));
        }
        if (parts.size() != 3) {
            throw ConfigError("range grid must look like start:stop:step, got '" + text + "'");
        }
        const double start = parse_double("grid start", parts[0]);
        const double stop = parse_double("grid stop", parts[1]);
        const double step = parse_double("grid step", parts[2]);
        if (!(step > 0.0) || stop < start) {
            throw ConfigError("range grid needs step > 0 and stop >= start, got '" + text + "'");
        }
        // Count-based so accumulated rounding never adds or drops a point.
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(parse_double("grid value", trimmed(item)));
    }
    return out;
}

std::string ExperimentConfig::get_string(const std::string& key, const std::optional<std::string>& fallback) const {
    const auto it = parameters.find(key);
    if (it != parameters.end()) {
        return it->second;
    }
    if (fallback) {
        return *fallback;
    }
    throw ConfigError("missing required parameter '" + key + "' for experiment '" + experiment + "'");
}

double ExperimentConfig::get_double(const std::string& key, const std::optional<double>& fallback) const {
    const auto it = parameters.find(key);
    if (it != parameters.end()) {
        return parse_double(key, it->second);
    }
    if (fallback) {
        return *fallback;
    }
    throw ConfigError("missing required parameter '" + key + "' for experiment '" + experiment + "'");
}

std::size_t ExperimentConfig::get_size(const std::string& key, const std::optional<std::size_t>& fallback) const {
    const auto it = parameters.find(key);
    if (it != parameters.end()) {
        return static_cast<std::size_t>(parse_u64(key, it->second));
    }
    if (fallback) {
        return *fallback;
    }
    throw ConfigError("missing required parameter '" + key + "' for experiment '" + experiment + "'");
}

bool ExperimentConfig::get_bool(const std::string& key, const std::optional<bool>& fallback) const {
    const auto it = parameters.find(key);
    if (it == parameters.end()) {
        if (fallback) {
            return *fallback;
        }
        throw ConfigError("missing required parameter '" + key + "' for experiment '" + experiment + "'");
    }
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
        return false;
    }
    throw ConfigError("'" + key + "' must be a boolean, got '" + v + "'");
}

std::vector<double> ExperimentConfig::get_grid(const std::string& key,
                                               const std::optional<std::string>& fallback) const {
    try {
        return parse_grid(get_string(key, fallback));
    } catch (const ConfigError& e) {
        throw ConfigError("parameter '" + key + "': " + e.what());
    }
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override must look like key=value, got '" + assignment + "'");
    }
    std::string key = trimmed(assignment.substr(0, eq));
    const std::string value = trimmed(assignment.substr(eq + 1));
    if (key.rfind("parameters.", 0) == 0) {
        key = key.substr(11);
    } else if (key == "experiment.name" || key == "experiment") {
        cfg.experiment = value;
        return;
    } else if (key == "experiment.seed" || key == "seed") {
        cfg.seed = parse_u64("seed", value);
        return;
    } else if (key == "experiment.output" || key == "output") {
        cfg.output_path = value;
        return;
    }
    if (key.find('.') != std::string::npos) {
        throw ConfigError("unknown override target '" + key + "'");
    }
    cfg.parameters[key] = value;
}

ExperimentConfig parse_config_text(const std::string& text) {
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw ConfigError("key '" + section + "' must live inside a [experiment] or [parameters] section");
        }
        if (section == "experiment") {
            for (const auto& [key, node] : body) {
                const std::string value = trimmed(node.data());
                if (key == "name") {
                    cfg.experiment = value;
                } else if (key == "seed") {
                    cfg.seed = parse_u64("seed", value);
                } else if (key == "output") {
                    cfg.output_path = value;
                } else {
                    throw ConfigError("unknown key '" + key + "' in [experiment]");
                }
            }
        } else if (section == "parameters") {
            for (const auto& [key, node] : body) {
                cfg.parameters[key] = trimmed(node.data());
            }
        } else {
            throw ConfigError("unknown section [" + section + "]");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace qwork::app
