#include "sheafcx/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <limits>

namespace sheafcx::kernels {
namespace {

// kLaneWidth is 8, so every row is two 4-lane NEON registers per block.

std::ptrdiff_t find_divisor_neon(const std::int32_t* rows, std::size_t count,
                                 std::size_t stride, const std::int32_t* m) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        uint32x4_t any = vdupq_n_u32(0);
        for (std::size_t k = 0; k < stride; k += 4)
            any = vorrq_u32(any, vcgtq_s32(vld1q_s32(row + k), vld1q_s32(m + k)));
        if (vmaxvq_u32(any) == 0) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

std::ptrdiff_t find_multiple_neon(const std::int32_t* rows, std::size_t count,
                                  std::size_t stride, const std::int32_t* m) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        uint32x4_t any = vdupq_n_u32(0);
        for (std::size_t k = 0; k < stride; k += 4)
            any = vorrq_u32(any, vcgtq_s32(vld1q_s32(m + k), vld1q_s32(row + k)));
        if (vmaxvq_u32(any) == 0) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

std::int64_t min_weighted_neon(const std::int32_t* rows, std::size_t count,
                               std::size_t stride, const std::int32_t* w) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        int64x2_t acc = vdupq_n_s64(0);
        for (std::size_t k = 0; k < stride; k += 4) {
            const int32x4_t a = vld1q_s32(row + k);
            const int32x4_t b = vld1q_s32(w + k);
            acc = vmlal_s32(acc, vget_low_s32(a), vget_low_s32(b));
            acc = vmlal_high_s32(acc, a, b);
        }
        best = std::min(best, vaddvq_s64(acc));
    }
    return best;
}

void add_neon(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
              std::size_t stride) {
    for (std::size_t k = 0; k < stride; k += 4)
        vst1q_s32(out + k, vaddq_s32(vld1q_s32(a + k), vld1q_s32(b + k)));
}

void lcm_neon(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
              std::size_t stride) {
    for (std::size_t k = 0; k < stride; k += 4)
        vst1q_s32(out + k, vmaxq_s32(vld1q_s32(a + k), vld1q_s32(b + k)));
}

constexpr KernelTable kNeon{
    "neon",   find_divisor_neon, find_multiple_neon, min_weighted_neon,
    add_neon, lcm_neon,
};

}  // namespace

const KernelTable* neon_kernels_compiled() { return &kNeon; }

}  // namespace sheafcx::kernels
