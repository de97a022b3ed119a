#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sheafcx {

/// Dense row-major integer matrix, used for boundary maps and hull systems.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts with arbitrary precision if an intermediate
/// overflows, so the result is always exact.
std::size_t rank_over_rationals(const IntMatrix& m);

/// Determinant of a square matrix, exact; throws InternalError on overflow of
/// the 64-bit result.
std::int64_t determinant(const IntMatrix& m);

}  // namespace sheafcx
