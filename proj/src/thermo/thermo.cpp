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

#include "qwork/thermo/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qwork/core/errors.hpp"
#include "qwork/core/linalg.hpp"

namespace qwork::thermo {
namespace {

constexpr double kDegeneracyTol = 1e-12;
constexpr double kSupportTol = 1e-12;
constexpr double kWorkTol = 1e-12;

void check_dims(const DensityMatrix& rho, const HamiltonianSpec& h) {
    if (rho.dim() != h.dim()) {
        throw UsageError("state dimension " + std::to_string(rho.dim()) + " does not match Hamiltonian dimension " +
                         std::to_string(h.dim()));
    }
}

void require_incoherent(const DensityMatrix& rho, const HamiltonianSpec& h, const char* what) {
    if (!is_incoherent(rho, h)) {
        throw PreconditionError(std::string(what) +
                                " is defined for states incoherent in the energy eigenbasis; "
                                "use accessible_work for coherent states");
    }
}

// Kept-set Gibbs weight and removed probability for a removal mask.
struct Cut {
    double kept_weight;
    double removed_prob;
};

Cut evaluate(const std::vector<SupportLevel>& levels, unsigned long removed_mask) {
    Cut c{0.0, 0.0};
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (removed_mask & (1UL << i)) {
            c.removed_prob += levels[i].probability;
        } else {
            c.kept_weight += levels[i].gibbs_weight;
        }
    }
    return c;
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(std::vector<double> energies) : energies_(std::move(energies)) {
    if (energies_.empty()) {
        throw UsageError("Hamiltonian needs at least one level");
    }
    for (double e : energies_) {
        if (!std::isfinite(e)) {
            throw UsageError("Hamiltonian energies must be finite");
        }
    }
}

HamiltonianSpec HamiltonianSpec::qubit(double gap) { return HamiltonianSpec({0.0, gap}); }

double HamiltonianSpec::min_energy() const { return *std::min_element(energies_.begin(), energies_.end()); }

ComplexMatrix HamiltonianSpec::matrix() const { return ComplexMatrix::diagonal(std::span<const double>(energies_)); }

std::vector<std::vector<std::size_t>> HamiltonianSpec::eigenspaces() const {
    std::vector<std::size_t> order(energies_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return energies_[a] < energies_[b]; });
    std::vector<std::vector<std::size_t>> spaces;
    for (std::size_t idx : order) {
        if (!spaces.empty() && std::abs(energies_[spaces.back().front()] - energies_[idx]) <= kDegeneracyTol) {
            spaces.back().push_back(idx);
        } else {
            spaces.push_back({idx});
        }
    }
    for (auto& s : spaces) {
        std::sort(s.begin(), s.end());
    }
    return spaces;
}

ThermalContext::ThermalContext(double kT) : kT_(kT) {
    if (!(kT > 0.0) || !std::isfinite(kT)) {
        throw UsageError("kT must be positive and finite");
    }
}

double coherence_magnitude(const DensityMatrix& rho, const HamiltonianSpec& h) {
    check_dims(rho, h);
    const auto spaces = h.eigenspaces();
    std::vector<std::size_t> block(h.dim());
    for (std::size_t b = 0; b < spaces.size(); ++b) {
        for (std::size_t i : spaces[b]) {
            block[i] = b;
        }
    }
    double m = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (block[i] != block[j]) {
                m = std::max(m, std::abs(rho(i, j)));
            }
        }
    }
    return m;
}

bool is_incoherent(const DensityMatrix& rho, const HamiltonianSpec& h, double tol) {
    return coherence_magnitude(rho, h) < tol;
}

std::vector<double> gibbs_weights(const HamiltonianSpec& h, const ThermalContext& ctx) {
    const double e0 = h.min_energy();
    std::vector<double> w(h.dim());
    double z = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        w[i] = std::exp(-(h.energies()[i] - e0) / ctx.kT());
        z += w[i];
    }
    for (double& x : w) {
        x /= z;
    }
    return w;
}

DensityMatrix gibbs_state(const HamiltonianSpec& h, const ThermalContext& ctx) {
    return DensityMatrix::diagonal(gibbs_weights(h, ctx));
}

double gibbs_free_energy(const HamiltonianSpec& h, const ThermalContext& ctx) {
    // -kT ln Z = E0 - kT ln sum_i exp(-(E_i - E0)/kT)
    const double e0 = h.min_energy();
    double zs = 0.0;
    for (double e : h.energies()) {
        zs += std::exp(-(e - e0) / ctx.kT());
    }
    return e0 - ctx.kT() * std::log(zs);
}

double free_energy(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx) {
    check_dims(rho, h);
    double energy = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        energy += rho(i, i).real() * h.energies()[i];
    }
    return energy - ctx.kT() * von_neumann_entropy(rho);
}

DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpec& h) {
    check_dims(rho, h);
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto& space : h.eigenspaces()) {
        for (std::size_t i : space) {
            for (std::size_t j : space) {
                out(i, j) = rho(i, j);
            }
        }
    }
    return DensityMatrix::from_channel_output(std::move(out));
}

WorkQuantity average_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx) {
    check_dims(rho, h);
    require_incoherent(rho, h, "average_work");
    return WorkQuantity::average(free_energy(rho, h, ctx) - gibbs_free_energy(h, ctx));
}

WorkQuantity accessible_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx) {
    return average_work(dephase(rho, h), h, ctx);
}

double work_locking_gap(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx) {
    // Energies agree, so the gap is purely entropic.
    const double gap = ctx.kT() * (von_neumann_entropy(dephase(rho, h)) - von_neumann_entropy(rho));
    return std::max(0.0, gap);
}

std::vector<SupportLevel> support_levels(const DensityMatrix& rho, const HamiltonianSpec& h,
                                         const ThermalContext& ctx) {
    check_dims(rho, h);
    require_incoherent(rho, h, "single-shot work");
    const auto g = gibbs_weights(h, ctx);
    std::vector<SupportLevel> levels;
    for (const auto& space : h.eigenspaces()) {
        // gamma is proportional to the identity inside an eigenspace, so every
        // eigenvector of the block carries the same Gibbs weight.
        const double weight = g[space.front()];
        if (space.size() == 1) {
            const double p = rho(space.front(), space.front()).real();
            if (p > kSupportTol) {
                levels.push_back({p, weight});
            }
            continue;
        }
        ComplexMatrix block(space.size(), space.size());
        for (std::size_t a = 0; a < space.size(); ++a) {
            for (std::size_t b = 0; b < space.size(); ++b) {
                block(a, b) = rho(space[a], space[b]);
            }
        }
        for (double p : eigvalsh(block)) {
            if (p > kSupportTol) {
                levels.push_back({p, weight});
            }
        }
    }
    if (levels.size() > kMaxSmoothingLevels) {
        throw UsageError("single-shot smoothing search supports at most " + std::to_string(kMaxSmoothingLevels) +
                         " support levels");
    }
    return levels;
}

WorkQuantity single_shot_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx,
                              double epsilon) {
    if (!(epsilon >= 0.0) || epsilon >= 1.0) {
        throw UsageError("single-shot failure probability must lie in [0, 1)");
    }
    const auto levels = support_levels(rho, h, ctx);
    const unsigned long full = (1UL << levels.size()) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (unsigned long removed = 0; removed < full; ++removed) {  // removed == full would keep nothing
        const Cut c = evaluate(levels, removed);
        if (c.removed_prob <= epsilon + kSupportTol) {
            best = std::min(best, c.kept_weight);
        }
    }
    return WorkQuantity::single_shot(-ctx.kT() * std::log(best), epsilon);
}

double single_shot_failure(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx,
                           double work) {
    const auto levels = support_levels(rho, h, ctx);
    const unsigned long full = (1UL << levels.size()) - 1;
    double best = 1.0;
    for (unsigned long removed = 0; removed < full; ++removed) {
        const Cut c = evaluate(levels, removed);
        if (-ctx.kT() * std::log(c.kept_weight) >= work - kWorkTol) {
            best = std::min(best, c.removed_prob);
        }
    }
    return std::clamp(best, 0.0, 1.0);
}

double landauer_cost(const DensityMatrix& rho, const DensityMatrix& rho_prime, const ThermalContext& ctx) {
    if (rho.dim() != rho_prime.dim()) {
        throw UsageError("landauer_cost: dimension mismatch");
    }
    return ctx.kT() * (von_neumann_entropy(rho) - von_neumann_entropy(rho_prime));
}

}  // namespace qwork::thermo
