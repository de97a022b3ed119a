#include "sheafcx/kernels.hpp"

#include <algorithm>
#include <limits>

namespace sheafcx::kernels {
namespace {

std::ptrdiff_t find_divisor_scalar(const std::int32_t* rows, std::size_t count,
                                   std::size_t stride, const std::int32_t* m) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        bool divides = true;
        for (std::size_t k = 0; k < stride; ++k) {
            if (row[k] > m[k]) {
                divides = false;
                break;
            }
        }
        if (divides) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

std::ptrdiff_t find_multiple_scalar(const std::int32_t* rows, std::size_t count,
                                    std::size_t stride, const std::int32_t* m) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        bool multiple = true;
        for (std::size_t k = 0; k < stride; ++k) {
            if (m[k] > row[k]) {
                multiple = false;
                break;
            }
        }
        if (multiple) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
}

std::int64_t min_weighted_scalar(const std::int32_t* rows, std::size_t count,
                                 std::size_t stride, const std::int32_t* w) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < count; ++r) {
        const std::int32_t* row = rows + r * stride;
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < stride; ++k)
            acc += static_cast<std::int64_t>(row[k]) * w[k];
        best = std::min(best, acc);
    }
    return best;
}

void add_scalar(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                std::size_t stride) {
    for (std::size_t k = 0; k < stride; ++k) out[k] = a[k] + b[k];
}

void lcm_scalar(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                std::size_t stride) {
    for (std::size_t k = 0; k < stride; ++k) out[k] = std::max(a[k], b[k]);
}

constexpr KernelTable kScalar{
    "scalar",     find_divisor_scalar, find_multiple_scalar, min_weighted_scalar,
    add_scalar,   lcm_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace sheafcx::kernels
