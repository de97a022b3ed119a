#include "sheafcx/linalg.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/rational.hpp"

#include <optional>
#include <utility>

namespace sheafcx {
namespace {

struct Overflow {};

inline std::int64_t checked_fma_div(std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t d, std::int64_t divisor) {
    // (a*b - c*d) / divisor; the division is exact in Bareiss elimination.
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    v /= divisor;
    if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
    return static_cast<std::int64_t>(v);
}

inline BigInt checked_fma_div(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d, const BigInt& divisor) {
    return (a * b - c * d) / divisor;
}

// Returns (rank, last pivot); the last pivot is the determinant when the
// matrix is square and of full rank.
template <typename T>
std::pair<std::size_t, T> bareiss(std::vector<std::vector<T>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    T prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = checked_fma_div(a[rank][col], a[r][c], a[r][col], a[rank][c], prev);
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return {rank, sign < 0 ? T(-prev) : prev};
}

template <typename T>
std::vector<std::vector<T>> convert(const IntMatrix& m) {
    std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = T(m(r, c));
    return a;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    try {
        return bareiss(convert<std::int64_t>(m)).first;
    } catch (const Overflow&) {
        return bareiss(convert<BigInt>(m)).first;
    }
}

std::int64_t determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    BigInt det;
    try {
        auto [rank, last] = bareiss(convert<std::int64_t>(m));
        if (rank < m.rows()) return 0;
        return last;
    } catch (const Overflow&) {
        auto [rank, last] = bareiss(convert<BigInt>(m));
        if (rank < m.rows()) return 0;
        det = last;
    }
    if (det > INT64_MAX || det < INT64_MIN) throw InternalError("determinant overflows 64 bits");
    return det.convert_to<std::int64_t>();
}

}  // namespace sheafcx
