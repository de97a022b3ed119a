#pragma once

// Associated primes, irreducible decomposition, standard pairs, arithmetic
// degree and nilpotency of monomial ideals.

#include "sheafcx/ideal.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace sheafcx {

struct CoordinatePrime {
    std::vector<std::size_t> variables;  // sorted

    std::size_t codimension() const { return variables.size(); }
    friend auto operator<=>(const CoordinatePrime&, const CoordinatePrime&) = default;
};

/// Irredundant decomposition into ideals generated by pure powers of
/// variables, sorted canonically. Throws DomainError for zero/unit ideals.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

/// Radicals of the irredundant irreducible components, deduplicated, sorted.
std::vector<CoordinatePrime> associated_primes(const MonomialIdeal& ideal);

struct StandardPair {
    Monomial root;
    std::vector<std::size_t> freeVariables;  // sorted, disjoint from supp(root)

    friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

/// The standard monomials of I are the union of root * K[freeVariables] over
/// the pairs. The union need not be disjoint: (xy) has pairs (1,{x}) and
/// (1,{y}), both containing 1.
struct StandardPairDecomposition {
    std::vector<StandardPair> pairs;
    std::map<std::size_t, std::size_t> bySize;  // |freeVariables| -> count
};

/// Throws DomainError for zero/unit ideals.
StandardPairDecomposition standard_pairs(const MonomialIdeal& ideal);

/// Test-mode check: every pair is admissible and maximal, and every standard
/// monomial of degree <= maxDegree is covered by some pair.
bool verify_standard_pairs(const MonomialIdeal& ideal, const StandardPairDecomposition& sp,
                           int maxDegree);

struct AdegProfile {
    std::map<int, std::size_t> byCodim;  // k -> adeg^k, for k = 1..n
    MonomialIdeal computedOn;

    std::size_t at(int k) const;
};

/// Standard-pair counts of the saturation bucketed by k = (n+1) - |u|.
AdegProfile adeg_profile(const MonomialIdeal& ideal);

/// Least t >= 0 with base^t contained in target, searching t <= cap; -1 if
/// none. base^0 is the unit ideal.
int least_containing_power(const MonomialIdeal& base, const MonomialIdeal& target, int cap);

struct PowerInclusionCheck {
    std::int64_t exponent = 0;  // r * (n + p - 1)
    int leastExponent = -1;     // least t with (sqrt J)^t in J^p, -1 if above exponent
    bool holds = false;
};

struct NilpotencyReport {
    int index = 0;
    std::int64_t rCoefficient = 0;  // r(J) over visible centers
    std::size_t n = 0;              // projective dimension
    /// (sqrt J)^{r(J)(n+p-1)} in J^p, keyed by p.
    std::map<int, PowerInclusionCheck> inclusions;
    /// The (n+1-p) r(J) reading of the same statement, recorded separately.
    std::map<int, PowerInclusionCheck> alternateInclusions;
    bool boundHolds = false;  // index <= n * r(J)

    std::map<int, std::int64_t> required_exponents() const;
    std::map<int, bool> inclusions_verified() const;
};

/// Nilpotency index of the ideal sheaf (computed on the saturation) with the
/// power-inclusion checks for p = 1..maxP. Throws ResourceError when the
/// index exceeds `cap`.
NilpotencyReport nilpotency_index(const MonomialIdeal& ideal, int cap = 64, int maxP = 3);

}  // namespace sheafcx
