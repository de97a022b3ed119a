#pragma once

#include "sheafcx/ideal.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace suite {

inline constexpr std::uint64_t kSeed = 0x5eaf0c0ffee1ULL;

/// Uniform integer in [lo, hi] from the raw 64-bit stream; the mapping is
/// spelled out so the suite does not depend on the library's distributions.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// `count` random monomial ideals in 2..4 variables from 3..8 drawn
/// generators of degree 1..4 (degree 1 rare), keeping those with at least two
/// minimal generators and a proper saturation.
std::vector<sheafcx::MonomialIdeal> random_ideals(std::size_t count = 50,
                                                  std::uint64_t seed = kSeed);

/// (x^2, x*y*z^d, y^2) in four variables.
sheafcx::MonomialIdeal pathology(int d);

/// Ideals bundled under data/, each file's every ideal, in file order.
std::vector<sheafcx::MonomialIdeal> bundled_ideals(const std::string& dataDir);

}  // namespace suite
