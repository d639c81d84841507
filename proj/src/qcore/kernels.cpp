// Copyright 2026 The gentlegrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "gentlegrad/qcore/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gentlegrad::qcore::kernels {
namespace {

Backend g_backend = Backend::Scalar;
const KernelTable* g_active = nullptr;

Backend pick_default() {
    if (const char* env = std::getenv("GENTLEGRAD_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::Avx2;
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

void install(Backend b) {
    g_backend = b;
#if defined(GENTLEGRAD_BUILD_AVX2)
    g_active = (b == Backend::Avx2) ? &avx2_table() : &scalar_table();
#else
    g_active = &scalar_table();
#endif
}

void ensure_init() {
    if (g_active == nullptr) install(pick_default());
}

} // namespace

bool avx2_available() {
#if defined(GENTLEGRAD_BUILD_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& active() {
    ensure_init();
    return *g_active;
}

Backend active_backend() {
    ensure_init();
    return g_backend;
}

std::string backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool force_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) return false;
    install(b);
    return true;
}

} // namespace gentlegrad::qcore::kernels
