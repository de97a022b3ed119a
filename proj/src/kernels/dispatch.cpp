#include "sheafcx/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace sheafcx::kernels {

#ifdef SHEAFCX_HAVE_AVX2
const KernelTable* avx2_kernels_compiled();
#endif
#ifdef SHEAFCX_HAVE_NEON
const KernelTable* neon_kernels_compiled();
#endif

const KernelTable* avx2_table() {
#ifdef SHEAFCX_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? avx2_kernels_compiled() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_table() {
#ifdef SHEAFCX_HAVE_NEON
    return neon_kernels_compiled();  // Advanced SIMD is mandatory on AArch64.
#else
    return nullptr;
#endif
}

namespace {

const KernelTable& choose() {
    const char* env = std::getenv("SHEAFCX_SIMD");
    const std::string_view want = env ? env : "";
    if (want == "scalar") return scalar_table();
    if (want == "avx2" && avx2_table()) return *avx2_table();
    if (want == "neon" && neon_table()) return *neon_table();
    if (const auto* t = avx2_table()) return *t;
    if (const auto* t = neon_table()) return *t;
    return scalar_table();
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = choose();
    return table;
}

}  // namespace sheafcx::kernels
