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
#include <random>

#include "qwork/core/states.hpp"

namespace qwork {

using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal folded back into Q.
UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng);

PureState random_pure_state(std::size_t dim, Rng& rng);

/// Ginibre-induced mixed state G G^dagger / Tr(G G^dagger); full rank with
/// probability one.
DensityMatrix random_density_matrix(std::size_t dim, Rng& rng);

}  // namespace qwork
