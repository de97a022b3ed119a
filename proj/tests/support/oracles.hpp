#pragma once

// Brute-force references used only by tests. None of these share code paths
// with the library beyond the basic MonomialIdeal type.

#include "sheafcx/assoc.hpp"
#include "sheafcx/homology.hpp"
#include "sheafcx/ideal.hpp"
#include "sheafcx/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using sheafcx::Monomial;
using sheafcx::MonomialIdeal;
using sheafcx::Rational;

/// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Multigraded Betti numbers from the Taylor complex tensored with the
/// residue field (ideal indexing: beta_0 counts generators).
sheafcx::BettiTable taylor_betti(const MonomialIdeal& ideal);

/// max(|b| - i) over a Betti table.
int regularity_of(const sheafcx::BettiTable& table);

/// m in sat(I) iff m * x_i^N in I for every i, N large.
bool saturation_member(const MonomialIdeal& ideal, const Monomial& m);

/// Least d such that the degree-d monomials of sat(I) generate it up to
/// saturation, by the per-variable formula
///   max over generators g of sat(I) and variables i of
///   min { deg h : h a generator of sat(I), h_j <= g_j for j != i }.
int generation_degree_formula(const MonomialIdeal& ideal);

/// m^k in I^k for some k <= kmax.
bool integrally_dependent(const MonomialIdeal& ideal, const Monomial& m, int kmax);

/// Primes P = (I : m) over monomials m in a box, the textbook characterization
/// of associated primes of monomial ideals.
std::vector<sheafcx::CoordinatePrime> associated_primes_by_colons(const MonomialIdeal& ideal);

/// Intersection of ideals by brute force over the lcm of generator pairs.
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts);

}  // namespace oracle
