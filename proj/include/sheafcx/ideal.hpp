#pragma once

// Monomial ideals in a polynomial ring K[x_0, ..., x_n] over a field of
// characteristic zero. On P^n the ring carries the total-degree grading, and
// sheaf-level statements go through saturation by the irrelevant ideal.
//
// Every MonomialIdeal is kept in canonical form: its generators are the
// unique minimal monomial generators, sorted by total degree and then by
// exponent vector in descending lexicographic order. Equality of ideals is
// therefore equality of generator lists.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sheafcx {

class Ring {
public:
    /// Throws StructuralError if the list is empty or has duplicates/empty names.
    explicit Ring(std::vector<std::string> variableNames);

    /// x, y, z, w for up to four variables, x0, x1, ... beyond that.
    static Ring standard(std::size_t numVariables);

    std::size_t num_variables() const { return names_->size(); }
    /// n for P^n; the ring has n + 1 variables.
    std::size_t projective_dimension() const { return names_->size() - 1; }
    std::size_t stride() const { return stride_; }

    const std::vector<std::string>& variable_names() const { return *names_; }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
    std::size_t stride_;
};

class Monomial {
public:
    Monomial() = default;
    /// Throws StructuralError on negative exponents.
    explicit Monomial(std::vector<std::int32_t> exponents);

    static Monomial one(std::size_t numVariables);
    static Monomial variable(std::size_t numVariables, std::size_t index,
                             std::int32_t power = 1);

    std::size_t size() const { return exps_.size(); }
    std::int32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::int32_t>& exponents() const { return exps_; }

    std::int64_t degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    /// Variable indices with a positive exponent.
    std::vector<std::size_t> support() const;
    /// Product of the variables in the support.
    Monomial squarefree_part() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    /// a / gcd(a, b): the generator of ((a) : b).
    friend Monomial colon(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::int32_t> exps_;
};

/// `x^2*y`, or `1` for the unit monomial.
std::string to_string(const Monomial& m, const Ring& ring);

/// Canonical generator order: total degree ascending, then exponent vector
/// descending lexicographically.
bool canonical_less(const Monomial& a, const Monomial& b);

class MonomialIdeal {
public:
    /// The zero ideal of `ring`.
    explicit MonomialIdeal(Ring ring);

    /// The ideal generated by `gens`, minimalized. Throws StructuralError if a
    /// monomial has the wrong number of exponents.
    static MonomialIdeal from_generators(const Ring& ring, std::vector<Monomial> gens);
    static MonomialIdeal unit(const Ring& ring);
    /// (x_i : i in indices)
    static MonomialIdeal from_variables(const Ring& ring, const std::vector<std::size_t>& indices);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    /// Generator exponents as padded rows of width ring().stride().
    const std::vector<std::int32_t>& packed() const { return packed_; }

    std::int64_t max_generator_degree() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }

    std::string to_string() const;

private:
    friend MonomialIdeal adopt_rows(const Ring& ring, std::vector<std::int32_t> rows);

    Ring ring_;
    std::vector<Monomial> gens_;
    std::vector<std::int32_t> packed_;
};

/// minimalize(gens, ring): canonical minimal form of the generated ideal.
MonomialIdeal minimalize(const std::vector<Monomial>& gens, const Ring& ring);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Throws DomainError for p < 1.
MonomialIdeal power(const MonomialIdeal& ideal, int p);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : m) = { u : u*m in I }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// (I : P^infinity) for P generated by a set of variables. Throws DomainError
/// if P has a generator that is not a single variable.
MonomialIdeal saturation_by(const MonomialIdeal& ideal, const MonomialIdeal& primeOfVariables);
/// Saturation by the irrelevant ideal (all variables).
MonomialIdeal saturate(const MonomialIdeal& ideal);
/// Membership of m in saturate(ideal) without forming the saturation.
bool saturation_contains(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal radical(const MonomialIdeal& ideal);
bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// outer ⊇ inner
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);
/// All monomials of total degree d that lie in the ideal, in canonical order.
std::vector<Monomial> graded_piece(const MonomialIdeal& ideal, int d);
/// All monomials of total degree d in `numVariables` variables.
std::vector<Monomial> monomials_of_degree(std::size_t numVariables, int d);

/// Stable textual key of ring and generators, and its FNV-1a hash.
std::string canonical_key(const MonomialIdeal& ideal);
std::uint64_t canonical_hash(const MonomialIdeal& ideal);

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace sheafcx
