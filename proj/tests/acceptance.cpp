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

// Acceptance checks. Prints one PASS/FAIL line per criterion. Criteria named
// with --expect-fail are known failures: the exit status is non-zero if any
// other criterion fails or if an expected failure starts passing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "qwork/app/experiments.hpp"
#include "qwork/core/parallel.hpp"
#include "qwork/core/random.hpp"
#include "qwork/homogenizer/homogenizer.hpp"
#include "qwork/nogo/nogo.hpp"
#include "qwork/protocol/coherence_protocol.hpp"
#include "qwork/protocol/sweep.hpp"
#include "qwork/thermo/thermo.hpp"

namespace {

using namespace qwork;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

Outcome fidelity_invariance() {
    Rng rng(20260101);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto u = haar_unitary(d, rng);
        const auto rho = random_density_matrix(d, rng);
        const auto sigma = random_density_matrix(d, rng);
        worst = std::max(worst, std::abs(fidelity(apply_unitary(u, rho), apply_unitary(u, sigma)) - fidelity(rho, sigma)));
    }
    return {worst < 1e-9, "max |dF| = " + num(worst) + " over 1000 triples (d = 2..4)"};
}

Outcome no_universal_rotation() {
    Rng rng(20260102);
    double worst = 0.0;
    double beaten_by = 0.0;  // how far the best random unitary got above the bound
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_pure_state(2, rng);
        const auto b = random_pure_state(2, rng);
        const double bound = (1.0 + std::abs(inner(a.amplitudes(), b.amplitudes()))) / 2.0;
        worst = std::max(worst, std::abs(nogo::best_common_rotation(a, b).min_overlap_sq - bound));
        for (int k = 0; k < 200; ++k) {
            const auto u = haar_unitary(2, rng);
            const double v = std::min(std::norm((u * a)[1]), std::norm((u * b)[1]));
            beaten_by = std::max(beaten_by, v - bound);
        }
    }
    const double s = 1.0 / std::numbers::sqrt2;
    const auto zero = PureState::basis(2, 0);
    const auto plus = PureState::normalized({s, s});
    double example = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto u = haar_unitary(2, rng);
        example = std::max(example, std::abs(fidelity(u * zero, u * plus) - s));
    }
    const bool pass = worst < 1e-6 && beaten_by <= 1e-12 && example < 1e-12;
    return {pass, "max |opt - (1+|<a|b>|)/2| = " + num(worst) + ", random U exceed bound by <= " + num(beaten_by) +
                      ", (|0>,|+>) |F - 1/sqrt2| <= " + num(example) + " over 100 U"};
}

Outcome ideal_protocol() {
    const auto res = protocol::run_cycle({0.5, 0.0}, protocol::ReferenceState::uniform(100), protocol::GibbsTarget(0.1),
                                         thermo::ThermalContext(1.0));
    const bool pass = res.q >= 0.99 && std::abs(res.success_prob - 0.9) <= 0.02;
    return {pass, "q = " + num(res.q) + ", success = " + num(res.success_prob) + " (target 0.9 +- 0.02)"};
}

Outcome work_locking() {
    Rng rng(20260104);
    const auto h = thermo::HamiltonianSpec::qubit(1.0);
    const thermo::ThermalContext ctx(1.0);
    double min_gap = 1e300;
    std::size_t iff_violations = 0;
    std::size_t beaten = 0;
    std::size_t runs = 0;
    const auto fock = protocol::ReferenceState::fock(30, 15);
    const auto flat = protocol::ReferenceState::with_quality(30, 0.0);
    auto check_iff = [&](const DensityMatrix& rho) {
        const double gap = thermo::work_locking_gap(rho, h, ctx);
        min_gap = std::min(min_gap, gap);
        const bool zero_gap = std::abs(gap) < 1e-10;
        const bool incoherent = std::abs(rho(0, 1)) < 1e-10;
        if (zero_gap != incoherent) ++iff_violations;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = trial % 2 == 0 ? random_density_matrix(2, rng) : DensityMatrix(random_pure_state(2, rng));
        check_iff(rho);
        const auto u = haar_unitary(2, rng);
        for (const auto* ref : {&fock, &flat}) {
            for (double w : {0.2, 0.6, 1.0, 1.3}) {
                ++runs;
                if (protocol::compare_with_dephased(rho, *ref, u, h, ctx, w).improvement()) ++beaten;
            }
            for (double eps : {0.0, 0.1, 0.3}) {
                ++runs;
                const auto locked = protocol::single_shot_work_comparison(rho, *ref, u, h, ctx, eps);
                if (locked.protocol_work > locked.counterpart_work + 1e-12) ++beaten;
            }
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const double p = u01(rng);
        check_iff(DensityMatrix::diagonal(std::vector<double>{1.0 - p, p}));
    }
    const bool pass = min_gap >= -1e-12 && iff_violations == 0 && beaten == 0;
    return {pass, "min gap = " + num(min_gap) + ", iff violations = " + std::to_string(iff_violations) +
                      ", zero-quality runs beating dephased = " + std::to_string(beaten) + "/" + std::to_string(runs)};
}

Outcome phase_diagram() {
    std::vector<double> rs, qs;
    for (int i = 1; i <= 19; ++i) rs.push_back(0.05 * i);
    for (int j = 0; j < 20; ++j) qs.push_back(0.05 * j);
    const auto grid = protocol::sweep_improvement(rs, qs, 100, thermo::ThermalContext(1.0), default_workers());
    std::size_t non_monotone = 0, zero_row = 0, high_missing = 0, errors = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (grid.at(i, 0).improvement) ++zero_row;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            if (grid.at(i, j).error) ++errors;
            if (j > 0 && grid.at(i, j - 1).improvement && !grid.at(i, j).improvement) ++non_monotone;
            if (qs[j] >= 0.95 - 1e-12 && !grid.at(i, j).improvement) ++high_missing;
        }
    }
    const bool pass = non_monotone == 0 && zero_row == 0 && high_missing == 0 && errors == 0;
    return {pass, std::to_string(grid.points.size()) + " points; monotonicity breaks = " + std::to_string(non_monotone) +
                      ", improved at quality 0 = " + std::to_string(zero_row) +
                      ", unimproved at quality >= 0.95 = " + std::to_string(high_missing) +
                      ", error cells = " + std::to_string(errors)};
}

Outcome homogenizer_convergence() {
    const homogenizer::HomogenizerConfig cfg{50, 0.3, DensityMatrix::maximally_mixed(2)};
    const auto res = homogenizer::homogenize(DensityMatrix::basis(2, 0), cfg);
    bool monotone = true;
    std::size_t first_below = 0;
    for (std::size_t k = 0; k < res.distance_to_xi.size(); ++k) {
        if (k > 0 && res.distance_to_xi[k] > res.distance_to_xi[k - 1]) monotone = false;
        if (first_below == 0 && res.distance_to_xi[k] < 0.01) first_below = k + 1;
    }
    const bool pass = monotone && first_below != 0;
    return {pass, "D(rho_50, xi) = " + num(res.distance_to_xi.back()) + ", first below 0.01 at N = " +
                      std::to_string(first_below) + (monotone ? ", monotone" : ", NOT monotone")};
}

Outcome constructor_asymmetry() {
    using homogenizer::ReuseTask;
    const auto p2m = homogenizer::reuse_experiment(ReuseTask::pure_to_mixed, 100, 100, 0.1);
    const auto m2p = homogenizer::reuse_experiment(ReuseTask::mixed_to_pure, 100, 100, 0.1);
    const double t_p2m = p2m.back().task_error;
    const double t_m2p = m2p.back().task_error;
    const double single = m2p.front().task_error;
    double worst_ratio = 0.0;
    for (const auto& r : m2p) worst_ratio = std::max(worst_ratio, r.task_error / single);
    // Rounding noise is not asymmetry.
    const bool asymmetric = t_m2p > t_p2m + 1e-9;
    const bool degraded = worst_ratio > 2.0;
    return {asymmetric && degraded,
            "terminal error mixed->pure = " + num(t_m2p) + " vs pure->mixed = " + num(t_p2m) + " (diff " +
                num(t_m2p - t_p2m) + "); mixed->pure max error / single-use = " + num(worst_ratio) +
                " (needs > 2)"};
}

Outcome one_step_formula() {
    Rng rng(20260108);
    std::uniform_real_distribution<double> eta_dist(0.0, std::numbers::pi / 2);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random_density_matrix(2, rng);
        const auto xi = random_density_matrix(2, rng);
        const double eta = eta_dist(rng);
        // Brute force: cos(eta) 1 + i sin(eta) SWAP on rho (x) xi, then trace out the reservoir.
        ComplexMatrix u(4, 4);
        const cplx c = std::cos(eta), is = cplx(0.0, std::sin(eta));
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                u(2 * a + b, 2 * a + b) += c;
                u(2 * b + a, 2 * a + b) += is;
            }
        ComplexMatrix joint(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) joint(i, j) = rho(i / 2, j / 2) * xi(i % 2, j % 2);
        ComplexMatrix out(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    for (std::size_t l = 0; l < 4; ++l) out(i, j) += u(i, k) * joint(k, l) * std::conj(u(j, l));
        ComplexMatrix sys(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) sys(i, j) = out(2 * i, 2 * j) + out(2 * i + 1, 2 * j + 1);
        worst = std::max(worst, sys.max_abs_diff(homogenizer::one_step_system_map(rho, xi, eta)));
    }
    return {worst < 1e-12, "max entry deviation from 4x4 oracle = " + num(worst) + " over 100 cases"};
}

Outcome reduced_vs_exact() {
    Rng rng(20260109);
    std::uniform_real_distribution<double> eta_dist(0.05, std::numbers::pi / 2);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % homogenizer::kMaxExactReservoir;
        const homogenizer::HomogenizerConfig cfg{n, eta_dist(rng), random_density_matrix(2, rng)};
        const auto rho = random_density_matrix(2, rng);
        const auto reduced = homogenizer::homogenize(rho, cfg);
        const auto exact = homogenizer::homogenize_exact(rho, cfg);
        worst = std::max(worst, trace_distance(reduced.system, exact.system));
        for (std::size_t k = 0; k < n; ++k) {
            worst = std::max(worst, trace_distance(reduced.reservoir[k], exact.reservoir[k]));
        }
    }
    return {worst < 0.02, "max trace distance reduced vs exact = " + num(worst) + " over 20 cases (N = 1..10)"};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("qwork_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::size_t identical = 0, total = 0;
    std::string failures;
    for (const char* name : {"protocol", "sweep", "homogenizer", "reuse", "nogo-audit", "tolerance"}) {
        std::string outputs[2];
        for (int rep = 0; rep < 2; ++rep) {
            app::RunRequest req;
            req.config_path = std::string(QWORK_SOURCE_DIR) + "/configs/" + name + ".ini";
            const fs::path out = dir / (std::string(name) + "." + std::to_string(rep));
            req.overrides = {"output=" + out.string()};
            req.workers = rep == 0 ? 1 : default_workers();  // scheduling must not matter
            std::ostringstream sink_out, sink_err;
            if (app::run(req, sink_out, sink_err) != app::kExitOk) {
                failures += std::string(" ") + name + "(exit)";
            }
            outputs[rep] = slurp(out);
        }
        ++total;
        if (!outputs[0].empty() && outputs[0] == outputs[1]) {
            ++identical;
        } else {
            failures += std::string(" ") + name;
        }
    }
    fs::remove_all(dir);
    return {identical == total && failures.empty(),
            std::to_string(identical) + "/" + std::to_string(total) + " experiments byte-identical across reruns" +
                (failures.empty() ? "" : ", mismatched:" + failures)};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"fidelity unitary invariance", fidelity_invariance},
        {"no universal rotation", no_universal_rotation},
        {"ideal protocol limit", ideal_protocol},
        {"work-locking", work_locking},
        {"phase diagram", phase_diagram},
        {"homogenizer convergence", homogenizer_convergence},
        {"constructor asymmetry", constructor_asymmetry},
        {"one-step partial swap", one_step_formula},
        {"reduced-state bookkeeping", reduced_vs_exact},
        {"determinism", determinism},
    };

    int unexpected = 0;
    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool expected_fail = expected_failures.count(id) != 0;
        std::string tag = o.pass ? "PASS" : "FAIL";
        if (expected_fail) {
            tag += o.pass ? " (expected to fail; now passing)" : " (known)";
        }
        std::printf("[%s] criterion %d, %s: %s [%.2f s]\n", tag.c_str(), id, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        passed += o.pass ? 1 : 0;
        if (o.pass == expected_fail) {
            ++unexpected;
        }
    }
    std::printf("%d/%zu criteria pass; %d unexpected outcome(s)\n", passed, criteria.size(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
