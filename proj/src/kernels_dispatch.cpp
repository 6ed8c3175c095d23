// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uncert/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "uncert/errors.hpp"

namespace uncert::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa pick_initial() {
    const bool cpu_ok = cpu_has_avx2_fma() && avx2_ops() != nullptr;
    const char *env = std::getenv("UNCERT_KERNELS");
    if (env != nullptr) {
        const std::string v(env);
        if (v == "scalar")
            return Isa::Scalar;
        if (v == "avx2") {
            if (!cpu_ok)
                throw ConfigError("UNCERT_KERNELS=avx2 requested but AVX2+FMA is unavailable");
            return Isa::Avx2;
        }
        // anything else, including "auto", falls through to detection
    }
    return cpu_ok ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> &current() {
    static std::atomic<Isa> isa{pick_initial()};
    return isa;
}

} // namespace

bool avx2_supported() { return cpu_has_avx2_fma() && avx2_ops() != nullptr; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) {
    return isa == Isa::Avx2 ? std::string_view("avx2") : std::string_view("scalar");
}

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_supported())
        throw ConfigError("AVX2+FMA kernels are unavailable on this cpu/build");
    current().store(isa, std::memory_order_relaxed);
}

const Ops &active() {
    return active_isa() == Isa::Avx2 ? *avx2_ops() : scalar_ops();
}

} // namespace uncert::kernels
