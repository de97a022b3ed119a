#pragma once

// Bracketing the s-invariant of a monomial ideal sheaf on P^n.
//
// Upper bounds come from generation degrees: J^p(d) globally generated means
// d_p/p >= s for every p, and d_p/p converges to s. Lower bounds come from
// monomial curves t -> (t^w_i) in an affine chart: each such curve of degree
// max(w) meets J with multiplicity min over generators of w.a.

#include "sheafcx/homology.hpp"
#include "sheafcx/ideal.hpp"
#include "sheafcx/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sheafcx {

struct PowerEntry {
    int dp = 0;
    int regp = 0;
    std::string computedAt;  // ISO 8601, UTC

    /// Timestamps are bookkeeping and do not take part in comparisons.
    bool same_values(const PowerEntry& o) const { return dp == o.dp && regp == o.regp; }
};

struct PowerSequence {
    MonomialIdeal ideal{Ring::standard(1)};
    std::map<int, PowerEntry> entries;

    int horizon() const { return entries.empty() ? 0 : entries.rbegin()->first; }
    /// d_{l+m} <= d_l + d_m for all stored triples.
    bool subadditive() const;
};

struct SequenceOptions {
    unsigned threads = 1;
    // Powers outgrow the single-ideal cap quickly; the lattice stays small
    // because it is bounded by the exponent box, not by 2^generators.
    HomologyOptions homology{.generatorCap = 256};
};

/// d_p and reg_p for p = 1..pmax. Entries already present in `prior` are
/// reused. Throws DomainError for zero/unit sheaves, and ResourceError (with
/// the offending p in the message) when a cap is hit.
PowerSequence d_sequence(const MonomialIdeal& ideal, int pmax, const SequenceOptions& options = {},
                         const PowerSequence* prior = nullptr);

struct CurveWitness {
    std::size_t chart = 0;              // variable set to 1
    std::vector<std::int64_t> weights;  // one per remaining variable
    std::int64_t valuation = 0;
    std::int64_t degree = 0;
    Rational bound = 0;
};

/// Best monomial-curve bound over all charts. Candidate weights are given
/// per chart (length n); by default they are the chart restrictions of the
/// facet normals of NP(J) together with every primitive vector with entries
/// in 0..3. A zero bound means J is the unit ideal on every chart tried.
CurveWitness curve_lower_bound(
    const MonomialIdeal& ideal,
    const std::optional<std::vector<std::vector<std::int64_t>>>& candidates = std::nullopt);

/// v_w of the ideal restricted to `chart`.
std::int64_t chart_valuation(const MonomialIdeal& ideal, std::size_t chart,
                             const std::vector<std::int64_t>& weights);

struct SBracket {
    Rational lower;
    Rational upper;
    CurveWitness lowerWitness;
    int upperP = 0;
    int upperD = 0;
    Rational tolerance;
    bool converged = false;
    PowerSequence sequence;
};

/// Throws DomainError for pmax < 1 or tolerance <= 0.
SBracket s_bracket(const MonomialIdeal& ideal, int pmax, const Rational& tolerance,
                   const SequenceOptions& options = {}, const PowerSequence* prior = nullptr);

bool brackets_overlap(const SBracket& a, const SBracket& b);

struct PropertyReport {
    SBracket first, second, product;
    std::optional<SBracket> sum;  // absent when I1 + I2 is the unit sheaf
    SBracket firstClosure, secondClosure;

    bool productBound = false;  // lower(I1 I2) <= upper(I1) + upper(I2)
    bool sumBound = false;      // lower(I1 + I2) <= max(upper(I1), upper(I2))
    bool firstClosureOverlap = false;
    bool secondClosureOverlap = false;

    bool all_hold() const;
};

PropertyReport property_checks(const MonomialIdeal& first, const MonomialIdeal& second, int pmax,
                               const SequenceOptions& options = {});

}  // namespace sheafcx
