#pragma once

// Exponent-row kernels. Monomials are stored as rows of int32 exponents
// padded with zeros to a multiple of kLaneWidth, so every row starts on a
// lane boundary and the padding is neutral for comparisons, sums and maxima.
// Each kernel has a scalar reference and optional SIMD variants; the active
// table is chosen once at startup from CPU features.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sheafcx::kernels {

inline constexpr std::size_t kLaneWidth = 8;

inline constexpr std::size_t padded_stride(std::size_t numVars) {
    return numVars == 0 ? kLaneWidth : (numVars + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

struct KernelTable {
    std::string_view name;

    // Index of the first row that divides `m` (row <= m componentwise),
    // or -1 when none does.
    std::ptrdiff_t (*find_divisor)(const std::int32_t* rows, std::size_t count,
                                   std::size_t stride, const std::int32_t* m);

    // Index of the first row that `m` divides, or -1.
    std::ptrdiff_t (*find_multiple)(const std::int32_t* rows, std::size_t count,
                                    std::size_t stride, const std::int32_t* m);

    // min over rows of <w, row>; INT64_MAX for an empty row set.
    std::int64_t (*min_weighted)(const std::int32_t* rows, std::size_t count,
                                 std::size_t stride, const std::int32_t* w);

    // out = a + b and out = max(a, b), lane by lane.
    void (*add)(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                std::size_t stride);
    void (*lcm)(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                std::size_t stride);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// The table used by the library. Honours SHEAFCX_SIMD=scalar|avx2|neon
/// when the requested variant is available.
const KernelTable& active();

}  // namespace sheafcx::kernels
