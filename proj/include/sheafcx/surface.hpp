#pragma once

// Nef boundaries on a Neron-Severi lattice whose nef cone is the round cone
// { a : a.a >= 0, a.h >= 0 } (the abelian-surface case). Thresholds where a
// line meets that cone are roots of a rational quadratic, so they live in
// Q(sqrt D) and are handled exactly.

#include "sheafcx/rational.hpp"

#include <string>
#include <vector>

namespace sheafcx {

/// a + b sqrt(D) with D squarefree and positive; D = 1 and b = 0 for
/// rationals.
class QuadIrrational {
public:
    QuadIrrational() = default;
    QuadIrrational(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
    /// Throws DomainError for D <= 0.
    QuadIrrational(Rational a, Rational b, BigInt d);

    /// sqrt(q) for rational q >= 0, with the square part pulled out.
    static QuadIrrational sqrt_of(const Rational& q);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    int sign() const;
    double to_double() const;
    /// "a + b*sqrt(D)" with exact rationals.
    std::string to_string() const;

    friend QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y);
    friend QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y);
    friend QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y);
    friend QuadIrrational operator/(const QuadIrrational& x, const Rational& q);
    friend bool operator==(const QuadIrrational& x, const QuadIrrational& y);
    friend bool operator<(const QuadIrrational& x, const QuadIrrational& y) {
        return (x - y).sign() < 0;
    }

private:
    void normalize();
    static BigInt common_radicand(const QuadIrrational& x, const QuadIrrational& y);

    Rational a_ = 0;
    Rational b_ = 0;
    BigInt d_ = 1;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix via congruence
/// diagonalization. Throws StructuralError if the matrix is not symmetric.
Signature inertia(const std::vector<std::vector<Rational>>& gram);

struct DivisorClass {
    std::vector<Rational> coords;
};

class NSLattice {
public:
    /// Validates symmetry, signature (1, rank - 1) and h.h > 0. Throws
    /// StructuralError on shape problems and DomainError otherwise.
    NSLattice(std::vector<std::vector<BigInt>> gram, std::vector<BigInt> ample);

    /// The lattice of E x E for a general elliptic curve E: basis f1, f2 and
    /// the diagonal, all of square zero and pairwise intersection one.
    static NSLattice product_of_elliptic_curves();

    std::size_t rank() const { return gram_.size(); }
    const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
    const std::vector<BigInt>& ample() const { return ample_; }
    DivisorClass ample_class() const;

    /// Throws StructuralError on dimension mismatch.
    Rational intersect(const DivisorClass& a, const DivisorClass& b) const;

private:
    std::vector<std::vector<BigInt>> gram_;
    std::vector<BigInt> ample_;
};

bool is_nef(const NSLattice& lattice, const DivisorClass& alpha);

/// Whether s*H - C is nef for an exact s in Q(sqrt D).
bool is_nef_along(const NSLattice& lattice, const DivisorClass& h, const DivisorClass& c,
                  const QuadIrrational& s);

struct SInvariantResult {
    QuadIrrational s;
    /// s*H - C is already nef at s = 0.
    bool alreadyNef = false;
    /// B^2 - A*C for the quadratic A s^2 - 2 B s + C.
    Rational discriminant;
    bool irrational = false;
    /// Nef at s, and not nef at s - q for each probe q in (0, 1e-6].
    bool probesVerified = false;
};

/// Least s >= 0 with s*H - C nef. Throws DomainError if H is not ample.
SInvariantResult s_invariant_divisorial(const NSLattice& lattice, const DivisorClass& h,
                                        const DivisorClass& c);

struct RescaleReport {
    QuadIrrational original;
    QuadIrrational rescaled;  // for (aH, C + bH)
    QuadIrrational expected;  // (s + b) / a
    bool holds = false;
};

/// Throws DomainError for a < 1 or b < 0.
RescaleReport rescale_check(const NSLattice& lattice, const DivisorClass& h,
                            const DivisorClass& c, int a, int b);

}  // namespace sheafcx
