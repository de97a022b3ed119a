#pragma once

// Newton polyhedra of monomial ideals and their facet (Rees) valuations.
//
// NP(I) = conv(exponents of generators) + R_{>=0}^{n+1}. Each facet with a
// positive offset gives a monomial valuation v (a primitive nonnegative
// normal) with v(I) = r; its center is the coordinate subspace cut out by the
// variables in the support of v. A facet whose normal has full support is
// centered at the irrelevant locus and is invisible on P^n; those are kept in
// the valuation list but left out of sheaf-level sums.

#include "sheafcx/ideal.hpp"
#include "sheafcx/rational.hpp"

#include <cstdint>
#include <vector>

namespace sheafcx {

struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct NewtonPolyhedron {
    MonomialIdeal ideal;
    /// Facets with positive offset, normals in descending lexicographic order.
    std::vector<Facet> facets;
    /// Generator exponents that are vertices of NP(I), canonical order.
    std::vector<Monomial> vertices;

    bool contains(const Monomial& m) const;
};

struct ReesValuation {
    std::vector<std::int64_t> normal;
    std::int64_t coefficient = 0;
    std::vector<std::size_t> center;
    /// Projective dimension of the center: (n + 1 - |center|) - 1; equals -1
    /// for the irrelevant locus.
    int centerDimension = 0;

    bool irrelevant() const { return centerDimension < 0; }
};

/// Throws DomainError for the zero ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& ideal);
/// max r_i over all facet valuations, irrelevant centers included.
std::int64_t r_coefficient(const MonomialIdeal& ideal);
/// max r_i over valuations whose center is visible on P^n (the distinguished
/// subvarieties of the ideal sheaf). Throws DomainError if there are none,
/// which happens exactly when the sheaf is the unit ideal.
std::int64_t sheaf_r_coefficient(const MonomialIdeal& ideal);

bool closure_contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

struct BezoutReport {
    Rational lhs;
    Rational rhs;
    Rational sUsed;
    bool satisfied = false;
    /// Valuations centered at the irrelevant locus, left out of lhs.
    std::vector<ReesValuation> excluded;
    /// r(J) over visible centers, and max(1, s)^n.
    std::int64_t rCoefficient = 0;
    Rational rBound;
    bool rBoundSatisfied = false;
};

/// Sum of r_i * s^dim(Z_i) over visible centers against s^n (all degrees 1
/// on P^n). Throws DomainError for s <= 0 or a zero/unit sheaf.
BezoutReport bezout_check(const MonomialIdeal& ideal, const Rational& s);

}  // namespace sheafcx
