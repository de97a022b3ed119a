#pragma once

// Multigraded Betti numbers of monomial ideals over Q, read off the lcm
// lattice, and the regularity / generation-degree invariants built on them.
//
// Indexing follows the ideal, not the quotient: beta_{0,b}(I) = 1 exactly at
// the minimal generators b, and beta_{i,b}(I) counts i-th syzygies. Nonzero
// Betti numbers only occur in degrees b of the lcm lattice, and there
//
//     beta_{i,b}(I) = dim H~_{i-1}( open interval (1, b) of L_I ; Q )
//                   = dim H~_{i-1}( K^b(I) ; Q ),
//
// where K^b(I) = { F squarefree : x^(b-F) in I } is the upper Koszul complex
// of b. The two complexes are homotopy equivalent; K^b lives on at most n+1
// vertices and is what betti_numbers() evaluates. The order complex of the
// interval is available separately for cross-checks on small lattices.

#include "sheafcx/ideal.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace sheafcx {

struct HomologyOptions {
    std::size_t generatorCap = 24;
    std::size_t latticeCap = 1u << 20;
};

struct LcmLattice {
    Monomial bottom;
    /// All lcms of nonempty generator subsets, deduplicated, in ascending
    /// lexicographic exponent order.
    std::vector<Monomial> elements;
    /// For each element, indices of the generators dividing it; their lcm is
    /// the element, and every realizing subset is contained in this one.
    std::vector<std::vector<std::size_t>> atomLabels;

    std::size_t size() const { return elements.size() + 1; }
    /// Index into `elements`, or -1.
    std::ptrdiff_t index_of(const Monomial& m) const;
};

/// Throws DomainError for the zero ideal and ResourceError when the generator
/// or lattice cap is exceeded.
LcmLattice lcm_lattice(const MonomialIdeal& ideal, const HomologyOptions& options = {});

class BettiTable {
public:
    using Key = std::pair<int, Monomial>;  // (homological index, multidegree)

    void set(int i, const Monomial& b, std::size_t rank);
    std::size_t at(int i, const Monomial& b) const;
    const std::map<Key, std::size_t>& entries() const { return entries_; }

    /// Sum of ranks in homological index i.
    std::size_t total(int i) const;
    int max_index() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::size_t> entries_;
};

BettiTable betti_numbers(const MonomialIdeal& ideal, const HomologyOptions& options = {});

/// Reduced homology ranks of a finite simplicial complex given by its faces
/// (vertex lists; the empty face must be present unless the complex is void).
/// result[k + 1] = dim H~_k for k = -1, 0, 1, ...
std::vector<std::size_t> reduced_homology(const std::vector<std::vector<std::size_t>>& faces);

/// Reduced homology of the upper Koszul complex K^b(I).
std::vector<std::size_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& b);

/// f-vector of the order complex of the open interval (bottom, b) in the
/// lattice: result[k + 1] = number of chains with k + 1 elements, counted by
/// dynamic programming (the empty chain gives result[0] = 1).
std::vector<std::size_t> interval_chain_counts(const LcmLattice& lattice, const Monomial& b);

/// Reduced homology of the order complex of (bottom, b) built from explicit
/// chains. Throws ResourceError if more than chainCap chains would be built.
std::vector<std::size_t> interval_homology(const LcmLattice& lattice, const Monomial& b,
                                           std::size_t chainCap = 200000);

struct RegularityReport {
    int moduleRegularity = 0;
    int witnessIndex = 0;
    Monomial witnessDegree;
    MonomialIdeal saturatedInput;
    BettiTable betti;
};

/// Regularity of the ideal sheaf: max(|b| - i) over the Betti table of the
/// saturation. Throws DomainError when the saturation is zero or the unit.
RegularityReport regularity(const MonomialIdeal& ideal, const HomologyOptions& options = {});

/// Least d such that the degree-d piece of the saturation generates the
/// saturation up to saturation, i.e. J(d) is globally generated.
int generation_degree(const MonomialIdeal& ideal);

/// Checks that the ideal is a nonzero, non-unit sheaf; returns its saturation.
MonomialIdeal require_proper_sheaf(const MonomialIdeal& ideal, const char* what);

}  // namespace sheafcx
