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

#include "qwork/app/experiments.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qwork/app/format.hpp"
#include "qwork/app/output.hpp"
#include "qwork/core/errors.hpp"
#include "qwork/core/kernels.hpp"
#include "qwork/core/parallel.hpp"
#include "qwork/homogenizer/homogenizer.hpp"
#include "qwork/nogo/nogo.hpp"
#include "qwork/protocol/coherence_protocol.hpp"
#include "qwork/protocol/sweep.hpp"
#include "qwork/thermo/thermo.hpp"

namespace qwork::app {
namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxLevels = 1000;
constexpr std::size_t kMaxCycles = 100000;
constexpr std::size_t kMaxReservoir = 1000000;
constexpr std::size_t kMaxTrials = 10000000;

const std::vector<ExperimentInfo>& catalog_storage() {
    static const std::vector<ExperimentInfo> catalog = {
        {"protocol",
         "repeated cycles of coherent work extraction with a ladder reference",
         "csv",
         {{"p", std::nullopt, "excited population of the input, [0, 1]"},
          {"phi", "0", "input phase"},
          {"r", std::nullopt, "Gibbs target parameter, (0, 1)"},
          {"L", std::nullopt, "reference ladder levels, 2..1000"},
          {"quality", "max", "reference coherence quality, [0, (L-1)/L] or max"},
          {"kT", "1", "temperature, > 0"},
          {"cycles", "1", "number of cycles, reference carried over"},
          {"target", "gibbs", "rotation target: gibbs | excited"},
          {"repump", "true", "push the reference back up after each cycle"}}},
        {"sweep",
         "improvement phase diagram over Gibbs parameter r and reference quality",
         "csv",
         {{"r_grid", std::nullopt, "grid of r values in (0, 1)"},
          {"quality_grid", std::nullopt, "grid of reference qualities >= 0"},
          {"L", std::nullopt, "reference ladder levels, 2..1000"},
          {"kT", "1", "temperature, > 0"}}},
        {"homogenizer",
         "trajectory of a qubit through one pass of a partial-swap reservoir",
         "csv",
         {{"eta", std::nullopt, "coupling, (0, pi/2]"},
          {"N", std::nullopt, "reservoir size"},
          {"input", "zero", "system state: zero | one | plus | minus | mixed"},
          {"xi", "mixed", "reservoir state: zero | one | plus | minus | mixed"},
          {"mode", "reduced", "reduced | exact (full tensor simulation, N <= 10)"}}},
        {"reuse",
         "task error when one reservoir serves many inputs without reset",
         "csv",
         {{"task", "both", "pure_to_mixed | mixed_to_pure | both"},
          {"M", std::nullopt, "number of uses"},
          {"N", std::nullopt, "reservoir size"},
          {"eta", std::nullopt, "coupling, (0, pi/2]"}}},
        {"nogo-audit",
         "randomized overlap and fidelity invariance audit, plus worked examples",
         "json",
         {{"n_trials", std::nullopt, "random trials"}}},
        {"tolerance",
         "protocol quality when the input drifts from the state the rotation was tuned for",
         "json",
         {{"p_center", std::nullopt, "population the rotation is tuned to, (0, 1)"},
          {"deltas", std::nullopt, "grid of population offsets"},
          {"L", std::nullopt, "reference ladder levels, 2..1000"},
          {"quality", "max", "reference coherence quality or max"},
          {"fd_step", "0.01", "finite-difference step for the slope estimate"}}},
    };
    return catalog;
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

// Fills in defaults and rejects keys the experiment does not know about.
ExperimentConfig with_defaults(const ExperimentConfig& cfg, const ExperimentInfo& info) {
    ExperimentConfig out = cfg;
    std::set<std::string> known;
    for (const auto& p : info.params) {
        known.insert(p.name);
        if (!out.has(p.name) && p.default_value) {
            out.parameters[p.name] = *p.default_value;
        }
    }
    for (const auto& [key, value] : cfg.parameters) {
        require(known.count(key) != 0, "unknown parameter '" + key + "' for experiment '" + info.name + "'");
    }
    for (const auto& p : info.params) {
        require(out.has(p.name), "missing required parameter '" + p.name + "' for experiment '" + info.name + "'");
    }
    return out;
}

std::size_t levels_param(const ExperimentConfig& cfg) {
    const std::size_t L = cfg.get_size("L");
    require(L >= 2 && L <= kMaxLevels, "L must lie in [2, " + std::to_string(kMaxLevels) + "]");
    return L;
}

double kT_param(const ExperimentConfig& cfg) {
    const double kT = cfg.get_double("kT");
    require(kT > 0.0, "kT must be positive");
    return kT;
}

double eta_param(const ExperimentConfig& cfg) {
    const double eta = cfg.get_double("eta");
    require(eta > 0.0 && eta <= std::numbers::pi / 2, "eta must lie in (0, pi/2]");
    return eta;
}

double quality_param(const ExperimentConfig& cfg, std::size_t levels) {
    const std::string text = cfg.get_string("quality");
    const double top = protocol::ReferenceState::max_quality(levels);
    if (text == "max") {
        return top;
    }
    const double q = parse_double("quality", text);
    require(q >= 0.0 && q <= top + 1e-12,
            "quality must lie in [0, " + fmt_double(top) + "] for L = " + std::to_string(levels));
    return q;
}

DensityMatrix named_qubit_state(const std::string& key, const std::string& name) {
    const double s = 1.0 / std::numbers::sqrt2;
    if (name == "zero") {
        return DensityMatrix::basis(2, 0);
    }
    if (name == "one") {
        return DensityMatrix::basis(2, 1);
    }
    if (name == "plus") {
        return DensityMatrix(PureState::normalized({s, s}));
    }
    if (name == "minus") {
        return DensityMatrix(PureState::normalized({s, -s}));
    }
    if (name == "mixed") {
        return DensityMatrix::maximally_mixed(2);
    }
    throw ConfigError("'" + key + "' must be one of zero | one | plus | minus | mixed, got '" + name + "'");
}

using Execute = std::function<std::string(std::string&)>;

Execute prepare_protocol(const ExperimentConfig& cfg) {
    const double p = cfg.get_double("p");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const double phi = cfg.get_double("phi");
    const double r = cfg.get_double("r");
    require(r > 0.0 && r < 1.0, "r must lie in (0, 1)");
    const std::size_t L = levels_param(cfg);
    const double quality = quality_param(cfg, L);
    const double kT = kT_param(cfg);
    const std::size_t cycles = cfg.get_size("cycles");
    require(cycles >= 1 && cycles <= kMaxCycles, "cycles must lie in [1, " + std::to_string(kMaxCycles) + "]");
    const std::string target = cfg.get_string("target");
    require(target == "gibbs" || target == "excited", "target must be gibbs or excited");
    protocol::ProtocolOptions options;
    options.target = target == "gibbs" ? protocol::RotationTarget::coherent_gibbs : protocol::RotationTarget::excited;
    options.repump = cfg.get_bool("repump");

    return [=](std::string& summary) {
        const protocol::CoherentInput input{p, phi};
        const auto reference = protocol::ReferenceState::with_quality(L, quality);
        const auto results = protocol::run_cycles(input, reference, protocol::GibbsTarget(r),
                                                  thermo::ThermalContext(kT), cycles, options);
        std::ostringstream os;
        os << "cycle,q,success_prob,work_extracted,repump_cost,net_work,boundary_leakage,reference_quality\n";
        double total_net = 0.0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& res = results[i];
            total_net += res.net_work;
            os << (i + 1) << ',' << fmt_double(res.q) << ',' << fmt_double(res.success_prob) << ','
               << fmt_double(res.work_extracted) << ',' << fmt_double(res.repump_cost) << ','
               << fmt_double(res.net_work) << ',' << fmt_double(res.boundary_leakage) << ','
               << fmt_double(res.reference_after.quality()) << '\n';
        }
        json s;
        s["first_cycle_q"] = results.front().q;
        s["first_cycle_success_prob"] = results.front().success_prob;
        s["last_cycle_q"] = results.back().q;
        s["total_net_work"] = total_net;
        summary = s.dump();
        return os.str();
    };
}

Execute prepare_sweep(const ExperimentConfig& cfg, std::size_t workers) {
    const auto r_grid = cfg.get_grid("r_grid");
    const auto quality_grid = cfg.get_grid("quality_grid");
    for (double r : r_grid) {
        require(r > 0.0 && r < 1.0, "r_grid values must lie in (0, 1)");
    }
    for (double q : quality_grid) {
        require(q >= 0.0 && q <= 1.0, "quality_grid values must lie in [0, 1]");
    }
    const std::size_t L = levels_param(cfg);
    const double kT = kT_param(cfg);

    return [=](std::string& summary) {
        const auto grid = protocol::sweep_improvement(r_grid, quality_grid, L, thermo::ThermalContext(kT), workers);
        std::ostringstream os;
        protocol::write_sweep_csv(os, grid);
        std::size_t improved = 0;
        std::size_t errors = 0;
        for (const auto& pt : grid.points) {
            improved += pt.improvement ? 1 : 0;
            errors += pt.error ? 1 : 0;
        }
        json s;
        s["points"] = grid.points.size();
        s["improved_points"] = improved;
        s["error_points"] = errors;
        summary = s.dump();
        return os.str();
    };
}

Execute prepare_homogenizer(const ExperimentConfig& cfg) {
    const double eta = eta_param(cfg);
    const std::size_t n = cfg.get_size("N");
    require(n >= 1 && n <= kMaxReservoir, "N must lie in [1, " + std::to_string(kMaxReservoir) + "]");
    const DensityMatrix input = named_qubit_state("input", cfg.get_string("input"));
    const DensityMatrix xi = named_qubit_state("xi", cfg.get_string("xi"));
    const std::string mode = cfg.get_string("mode");
    require(mode == "reduced" || mode == "exact", "mode must be reduced or exact");
    require(mode == "reduced" || n <= homogenizer::kMaxExactReservoir,
            "exact mode supports N <= " + std::to_string(homogenizer::kMaxExactReservoir));

    return [=](std::string& summary) {
        const homogenizer::HomogenizerConfig hc{n, eta, xi};
        const auto res = mode == "exact" ? homogenizer::homogenize_exact(input, hc) : homogenizer::homogenize(input, hc);
        std::ostringstream os;
        os << "step,distance_to_xi\n";
        os << 0 << ',' << fmt_double(trace_distance(input, xi)) << '\n';
        for (std::size_t k = 0; k < res.distance_to_xi.size(); ++k) {
            os << (k + 1) << ',' << fmt_double(res.distance_to_xi[k]) << '\n';
        }
        json s;
        s["final_distance_to_xi"] = res.distance_to_xi.back();
        s["mode"] = mode;
        summary = s.dump();
        return os.str();
    };
}

Execute prepare_reuse(const ExperimentConfig& cfg) {
    const std::string task = cfg.get_string("task");
    std::vector<homogenizer::ReuseTask> tasks;
    if (task == "both") {
        tasks = {homogenizer::ReuseTask::pure_to_mixed, homogenizer::ReuseTask::mixed_to_pure};
    } else {
        try {
            tasks = {homogenizer::parse_reuse_task(task)};
        } catch (const UsageError&) {
            throw ConfigError("task must be pure_to_mixed, mixed_to_pure or both");
        }
    }
    const std::size_t uses = cfg.get_size("M");
    require(uses >= 1 && uses <= kMaxCycles, "M must lie in [1, " + std::to_string(kMaxCycles) + "]");
    const std::size_t n = cfg.get_size("N");
    require(n >= 1 && n <= 100000, "N must lie in [1, 100000]");
    const double eta = eta_param(cfg);

    return [=](std::string& summary) {
        std::ostringstream os;
        json s = json::object();
        bool header = true;
        for (const auto t : tasks) {
            const auto records = homogenizer::reuse_experiment(t, uses, n, eta);
            homogenizer::write_reuse_csv(os, records, t, n, eta, header);
            header = false;
            const double single = records.front().task_error;
            json entry;
            entry["single_use_error"] = single;
            entry["terminal_error"] = records.back().task_error;
            json first_double = nullptr;
            for (const auto& rec : records) {
                if (rec.task_error > 2.0 * single) {
                    first_double = rec.use_index;
                    break;
                }
            }
            entry["first_use_above_twice_single"] = first_double;
            s[std::string(homogenizer::to_string(t))] = entry;
        }
        s["threshold_note"] = "twice the single-use error is an operational degradation threshold, not a derived bound";
        summary = s.dump();
        return os.str();
    };
}

json verdicts_json(const std::vector<nogo::PairVerdict>& verdicts) {
    json arr = json::array();
    for (const auto& v : verdicts) {
        arr.push_back({{"first", v.first},
                       {"second", v.second},
                       {"fidelity", v.fidelity},
                       {"equal_work", v.equal_work},
                       {"permitted", v.permitted}});
    }
    return arr;
}

Execute prepare_nogo(const ExperimentConfig& cfg) {
    const std::size_t trials = cfg.get_size("n_trials");
    require(trials >= 1 && trials <= kMaxTrials, "n_trials must lie in [1, " + std::to_string(kMaxTrials) + "]");
    const std::uint64_t seed = cfg.seed;

    return [=](std::string& summary) {
        const auto audit = nogo::overlap_invariance_audit(trials, seed);
        const double s2 = 1.0 / std::numbers::sqrt2;
        const PureState zero = PureState::basis(2, 0);
        const PureState plus = PureState::normalized({s2, s2});
        const auto rot = nogo::best_common_rotation(zero, plus);

        nogo::WorkTaskSpec unequal{{DensityMatrix(zero), DensityMatrix(plus)}, {1.0, 0.5}};
        nogo::WorkTaskSpec orthogonal{{DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}, {1.0, 0.5}};

        json doc;
        doc["experiment"] = "nogo-audit";
        doc["seed"] = seed;
        doc["trials"] = audit.trials;
        doc["max_pure_overlap_deviation"] = audit.max_pure_deviation;
        doc["max_mixed_fidelity_deviation"] = audit.max_mixed_deviation;
        doc["tuned_pairs"] = audit.tuned_pairs;
        doc["universal_rotations_found"] = audit.universal_rotations_found;
        doc["best_tuned_partner_fidelity"] = audit.best_tuned_partner_fidelity;
        doc["example_pair"] = {{"states", {"|0>", "|+>"}},
                               {"fidelity", fidelity(zero, plus)},
                               {"best_common_rotation_min_overlap_sq", rot.min_overlap_sq},
                               {"optimum", (1.0 + std::abs(inner(zero.amplitudes(), plus.amplitudes()))) / 2.0}};
        doc["distinguishability"] = {
            {"nonorthogonal_unequal_work", verdicts_json(nogo::check_distinguishability_precondition(unequal))},
            {"orthogonal_unequal_work", verdicts_json(nogo::check_distinguishability_precondition(orthogonal))}};
        const auto schedule = nogo::identical_work_schedule(unequal);
        doc["identical_work_schedule"] = {{"w_common", schedule.w_common}, {"feasible", schedule.feasible}};

        json s;
        s["universal_rotations_found"] = audit.universal_rotations_found;
        s["max_mixed_fidelity_deviation"] = audit.max_mixed_deviation;
        summary = s.dump();
        return doc.dump(2) + "\n";
    };
}

Execute prepare_tolerance(const ExperimentConfig& cfg) {
    const double p_center = cfg.get_double("p_center");
    require(p_center > 0.0 && p_center < 1.0, "p_center must lie in (0, 1)");
    const auto deltas = cfg.get_grid("deltas");
    for (double d : deltas) {
        const double p = p_center + d;
        require(p >= 0.0 && p <= 1.0, "p_center + delta must stay in [0, 1], fails for delta = " + fmt_double(d));
    }
    const std::size_t L = levels_param(cfg);
    const double quality = quality_param(cfg, L);
    const double fd_step = cfg.get_double("fd_step");
    require(fd_step > 0.0 && p_center - fd_step >= 0.0 && p_center + fd_step <= 1.0,
            "fd_step must be positive and keep p_center +- fd_step inside [0, 1]");

    return [=](std::string& summary) {
        const auto reference = protocol::ReferenceState::with_quality(L, quality);
        const auto curve = nogo::epsilon_tolerance_curve(p_center, deltas, reference, fd_step);
        json doc;
        doc["experiment"] = "tolerance";
        doc["p_center"] = curve.p_center;
        doc["L"] = L;
        doc["reference_quality"] = reference.quality();
        doc["q_ideal"] = curve.q_ideal;
        doc["fitted_slope_vs_population_mismatch"] = curve.fitted_slope;
        doc["population_drift"] = curve.population_drift;
        doc["fit_relative_rms_residual"] = curve.fit_residual;
        doc["finite_difference_slope"] = curve.finite_difference_slope;
        doc["fd_step"] = curve.fd_step;
        doc["linear_bound_constant"] = curve.linear_bound_constant;
        json pts = json::array();
        for (const auto& p : curve.points) {
            pts.push_back({{"delta", p.delta},
                           {"p", p.p},
                           {"amplitude_mismatch", p.amplitude_mismatch},
                           {"population_mismatch", p.population_mismatch},
                           {"q", p.q}});
        }
        doc["points"] = pts;
        json s;
        s["q_ideal"] = curve.q_ideal;
        s["fit_relative_rms_residual"] = curve.fit_residual;
        summary = s.dump();
        return doc.dump(2) + "\n";
    };
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_catalog() { return catalog_storage(); }

const ExperimentInfo* find_experiment(const std::string& name) {
    for (const auto& info : catalog_storage()) {
        if (info.name == name) {
            return &info;
        }
    }
    return nullptr;
}

std::string list_experiments_text() {
    std::ostringstream os;
    os << "Experiments:\n";
    for (const auto& info : catalog_storage()) {
        os << "\n  " << info.name << "  (" << info.extension << ")\n    " << info.summary << "\n";
        for (const auto& p : info.params) {
            os << "      " << p.name;
            if (p.default_value) {
                os << " = " << *p.default_value;
            } else {
                os << "  [required]";
            }
            os << "\n          " << p.description << "\n";
        }
    }
    return os.str();
}

PreparedExperiment prepare_experiment(const ExperimentConfig& raw, std::size_t workers) {
    const ExperimentInfo* info = find_experiment(raw.experiment);
    if (info == nullptr) {
        throw ConfigError(raw.experiment.empty() ? "config does not name an experiment"
                                                 : "unknown experiment '" + raw.experiment + "'");
    }
    const ExperimentConfig cfg = with_defaults(raw, *info);
    PreparedExperiment prepared;
    prepared.name = info->name;
    const std::string requested = cfg.output_path.empty() ? info->name + "." + info->extension : cfg.output_path;
    prepared.output_path = resolve_output_path(requested).string();
    try {
        if (info->name == "protocol") {
            prepared.execute = prepare_protocol(cfg);
        } else if (info->name == "sweep") {
            prepared.execute = prepare_sweep(cfg, workers);
        } else if (info->name == "homogenizer") {
            prepared.execute = prepare_homogenizer(cfg);
        } else if (info->name == "reuse") {
            prepared.execute = prepare_reuse(cfg);
        } else if (info->name == "nogo-audit") {
            prepared.execute = prepare_nogo(cfg);
        } else {
            prepared.execute = prepare_tolerance(cfg);
        }
    } catch (const UsageError& e) {
        throw ConfigError(e.what());
    }
    return prepared;
}

std::string config_echo_json(const ExperimentConfig& cfg) {
    json doc;
    doc["experiment"] = cfg.experiment;
    doc["seed"] = cfg.seed;
    doc["output"] = cfg.output_path;
    json params = json::object();
    for (const auto& [k, v] : cfg.parameters) {
        params[k] = v;
    }
    doc["parameters"] = params;
    return doc.dump();
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    ExperimentConfig cfg;
    PreparedExperiment prepared;
    const std::size_t workers = request.workers.value_or(default_workers());
    try {
        require(workers >= 1, "--workers must be at least 1");
        cfg = load_config(request.config_path);
        for (const auto& o : request.overrides) {
            apply_override(cfg, o);
        }
        if (request.seed) {
            cfg.seed = *request.seed;
        }
        if (find_experiment(cfg.experiment) == nullptr) {
            err << "config error: unknown experiment '" << cfg.experiment << "'\n\n" << list_experiments_text();
            return kExitConfigError;
        }
        prepared = prepare_experiment(cfg, workers);
        if (const ExperimentInfo* info = find_experiment(cfg.experiment)) {
            cfg = with_defaults(cfg, *info);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    std::string data;
    std::string summary = "{}";
    try {
        data = prepared.execute(summary);
    } catch (const ValidationError& e) {
        err << "numerical validation failed: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const PreconditionError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const UsageError& e) {
        err << "run rejected its inputs: " << e.what() << "\n";
        return kExitValidationError;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    try {
        atomic_write(prepared.output_path, data);
        json manifest;
        manifest["config"] = json::parse(config_echo_json(cfg));
        manifest["config_path"] = request.config_path;
        manifest["version"] = kVersion;
        manifest["kernels"] = std::string(kernels::active().name);
        manifest["workers"] = workers;
        manifest["wall_clock_seconds"] = seconds;
        manifest["outputs"] = json::array({{{"path", prepared.output_path}, {"sha256", sha256_hex(data)}}});
        manifest["summary"] = json::parse(summary);
        atomic_write(prepared.output_path + ".manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        err << "cannot write outputs: " << e.what() << "\n";
        return kExitIoError;
    }
    out << "wrote " << prepared.output_path << "\n";
    return kExitOk;
}

}  // namespace qwork::app
