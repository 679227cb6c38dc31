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

#include <cstdlib>
#include <string>

#include "qwork/core/errors.hpp"
#include "qwork/core/kernels.hpp"

namespace qwork::kernels {

#if defined(QWORK_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(QWORK_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool force_scalar() {
    const char* env = std::getenv("QWORK_FORCE_SCALAR");
    return env != nullptr && std::string(env) != "0" && std::string(env) != "";
}

const KernelTable& select() {
#if defined(QWORK_HAVE_AVX2_KERNELS)
    if (!force_scalar() && cpu_has_avx2()) {
        return avx2_table();
    }
#endif
    return scalar_table();
}

}  // namespace

bool available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
            return cpu_has_avx2();
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!available(isa)) {
        throw UsageError("kernel variant not available on this build/CPU");
    }
#if defined(QWORK_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2) {
        return avx2_table();
    }
#endif
    return scalar_table();
}

const KernelTable& active() {
    static const KernelTable& t = select();
    return t;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::scalar};
    if (available(Isa::avx2)) {
        out.push_back(Isa::avx2);
    }
    return out;
}

}  // namespace qwork::kernels
