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

#include <iostream>

#include <CLI11.hpp>

#include "qwork/app/experiments.hpp"

int main(int argc, char** argv) {
    using namespace qwork::app;
    CLI::App app{"qwork: work extraction from coherence, homogenizer and no-go experiments"};
    app.footer("\n" + list_experiments_text());
    app.require_subcommand(1);

    RunRequest request;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    auto* run_cmd = app.add_subcommand("run", "run the experiment described by a config file");
    run_cmd->add_option("config", request.config_path, "config file")->required();
    run_cmd->add_option("--set", request.overrides, "override a config value, key=value (repeatable)");
    auto* seed_opt = run_cmd->add_option("--seed", seed, "override the seed");
    auto* workers_opt = run_cmd->add_option("--workers", workers, "worker threads (default: all cores)");

    auto* list_cmd = app.add_subcommand("list", "list experiments, their parameters and defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    if (list_cmd->parsed()) {
        std::cout << list_experiments_text();
        return kExitOk;
    }
    if (*seed_opt) {
        request.seed = seed;
    }
    if (*workers_opt) {
        request.workers = workers;
    }
    (void)run_cmd;
    return run(request, std::cout, std::cerr);
}
