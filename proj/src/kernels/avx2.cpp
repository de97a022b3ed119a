#include "sheafcx/kernels.hpp"

#ifndef __AVX2__
#error "kernels/avx2.cpp must be compiled with -mavx2"
#endif

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace sheafcx::kernels {
namespace {

inline __m256i load8(const std::int32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::ptrdiff_t find_divisor_avx2(const std::int32_t* rows, std::size_t count,
                                 std::size_t stride, const std::int32_t* m) {
    if (stride == kLaneWidth) {
        const __m256i target = load8(m);
        for (std::size_t r = 0; r < count; ++r) {
            const __m256i gt = _mm256_cmpgt_epi32(load8(rows + r * kLaneWidth), target);
            if (_mm256_testz_si256(gt, gt)) return static_cast<std::ptrdiff_t>(r);
        }
        return -1;
    }
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        __m256i any = _mm256_setzero_si256();
        for (std::size_t k = 0; k < stride; k += kLaneWidth)
            any = _mm256_or_si256(any, _mm256_cmpgt_epi32(load8(row + k), load8(m + k)));
        if (_mm256_testz_si256(any, any)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

std::ptrdiff_t find_multiple_avx2(const std::int32_t* rows, std::size_t count,
                                  std::size_t stride, const std::int32_t* m) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        __m256i any = _mm256_setzero_si256();
        for (std::size_t k = 0; k < stride; k += kLaneWidth)
            any = _mm256_or_si256(any, _mm256_cmpgt_epi32(load8(m + k), load8(row + k)));
        if (_mm256_testz_si256(any, any)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

// Products are widened to 64 bits: even lanes through _mm256_mul_epi32
// directly, odd lanes after shifting them down.
std::int64_t min_weighted_avx2(const std::int32_t* rows, std::size_t count,
                               std::size_t stride, const std::int32_t* w) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t k = 0; k < stride; k += kLaneWidth) {
            const __m256i a = load8(row + k);
            const __m256i b = load8(w + k);
            acc = _mm256_add_epi64(acc, _mm256_mul_epi32(a, b));
            acc = _mm256_add_epi64(
                acc, _mm256_mul_epi32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32)));
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        best = std::min(best, lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    }
    return best;
}

void add_avx2(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
              std::size_t stride) {
    for (std::size_t k = 0; k < stride; k += kLaneWidth)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k),
                            _mm256_add_epi32(load8(a + k), load8(b + k)));
}

void lcm_avx2(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
              std::size_t stride) {
    for (std::size_t k = 0; k < stride; k += kLaneWidth)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k),
                            _mm256_max_epi32(load8(a + k), load8(b + k)));
}

constexpr KernelTable kAvx2{
    "avx2",   find_divisor_avx2, find_multiple_avx2, min_weighted_avx2,
    add_avx2, lcm_avx2,
};

}  // namespace

const KernelTable* avx2_kernels_compiled() { return &kAvx2; }

}  // namespace sheafcx::kernels
