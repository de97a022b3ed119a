#include "sheafcx/surface.hpp"

#include "sheafcx/errors.hpp"

#include <cmath>
#include <utility>

namespace sheafcx {

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// n = m^2 * d with d squarefree, for n > 0.
std::pair<BigInt, BigInt> split_square(BigInt n) {
    BigInt m = 1, d = 1;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (p > 1000000) {
            const BigInt r = boost::multiprecision::sqrt(n);
            if (r * r == n) return {m * r, d};
            if (n > BigInt(1000000) * 1000000)
                throw ResourceError("radicand too large to factor: " + n.str());
            break;  // no factor below 1e6 and n < 1e12: n is prime
        }
        while (n % (p * p) == 0) {
            n /= p * p;
            m *= p;
        }
        if (n % p == 0) {
            n /= p;
            d *= p;
        }
    }
    return {m, d * n};
}

}  // namespace

// ---------------------------------------------------------------- Q(sqrt D)

QuadIrrational::QuadIrrational(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ <= 0) throw DomainError("radicand must be positive");
    auto [m, sq] = split_square(d_);
    b_ *= Rational(m);
    d_ = sq;
    normalize();
}

QuadIrrational QuadIrrational::sqrt_of(const Rational& q) {
    if (q < 0) throw DomainError("square root of a negative rational");
    if (q == 0) return QuadIrrational();
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return QuadIrrational(0, Rational(1) / Rational(den), num * den);
}

void QuadIrrational::normalize() {
    if (b_ == 0) d_ = 1;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

BigInt QuadIrrational::common_radicand(const QuadIrrational& x, const QuadIrrational& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw InternalError("mixed radicands sqrt(" + x.d_.str() + ") and sqrt(" + y.d_.str() + ")");
    return x.d_;
}

int QuadIrrational::sign() const {
    const int sa = sign_of(a_), sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

double QuadIrrational::to_double() const {
    return sheafcx::to_double(a_) + sheafcx::to_double(b_) * std::sqrt(d_.convert_to<double>());
}

std::string QuadIrrational::to_string() const {
    if (b_ == 0) return to_exact_string(a_);
    std::string root = "sqrt(" + d_.str() + ")";
    const Rational mag = b_ < 0 ? Rational(-b_) : b_;
    std::string term = mag == 1 ? root : to_exact_string(mag) + "*" + root;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + term;
    return to_exact_string(a_) + (b_ < 0 ? " - " : " + ") + term;
}

QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y) {
    QuadIrrational r;
    r.d_ = QuadIrrational::common_radicand(x, y);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.normalize();
    return r;
}

QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y) {
    QuadIrrational neg = y;
    neg.a_ = -neg.a_;
    neg.b_ = -neg.b_;
    return x + neg;
}

QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y) {
    QuadIrrational r;
    r.d_ = QuadIrrational::common_radicand(x, y);
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(r.d_);
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.normalize();
    return r;
}

QuadIrrational operator/(const QuadIrrational& x, const Rational& q) {
    if (q == 0) throw DomainError("division by zero");
    QuadIrrational r = x;
    r.a_ /= q;
    r.b_ /= q;
    r.normalize();
    return r;
}

bool operator==(const QuadIrrational& x, const QuadIrrational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

// ---------------------------------------------------------------- inertia

Signature inertia(const std::vector<std::vector<Rational>>& gram) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw StructuralError("gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw StructuralError("gram matrix is not symmetric");

    auto m = gram;
    std::vector<bool> done(n, false);
    Signature sig;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (!done[i] && m[i][i] != 0) pivot = i;
        if (pivot == n) {
            // All remaining diagonal entries vanish. Replace e_i by e_i + e_j
            // for a nonzero off-diagonal entry; the new diagonal is 2 m_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && !done[i] && !done[j] && m[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t k = 0; k < n; ++k) m[pi][k] += m[pj][k];
            for (std::size_t k = 0; k < n; ++k) m[k][pi] += m[k][pj];
            pivot = pi;
        }
        const Rational p = m[pivot][pivot];
        (p > 0 ? sig.positive : sig.negative) += 1;
        done[pivot] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m[i][pivot] == 0) continue;
            const Rational f = m[i][pivot] / p;
            for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[pivot][k];
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k]) m[pivot][k] = m[k][pivot] = 0;
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

// ---------------------------------------------------------------- lattice

NSLattice::NSLattice(std::vector<std::vector<BigInt>> gram, std::vector<BigInt> ample)
    : gram_(std::move(gram)), ample_(std::move(ample)) {
    const std::size_t n = gram_.size();
    if (n == 0) throw StructuralError("lattice rank must be positive");
    if (ample_.size() != n) throw StructuralError("ample vector length differs from the rank");
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw StructuralError("gram matrix is not square");
        for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(gram_[i][j]);
    }
    const Signature sig = inertia(q);
    if (sig.positive != 1 || sig.negative != n - 1)
        throw DomainError("intersection form has signature (" + std::to_string(sig.positive) +
                          ", " + std::to_string(sig.negative) + ", " + std::to_string(sig.zero) +
                          "); expected (1, " + std::to_string(n - 1) + ")");
    const DivisorClass h = ample_class();
    if (intersect(h, h) <= 0) throw DomainError("reference class has nonpositive square");
}

NSLattice NSLattice::product_of_elliptic_curves() {
    return NSLattice({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {1, 1, 1});
}

DivisorClass NSLattice::ample_class() const {
    DivisorClass h;
    for (const auto& x : ample_) h.coords.emplace_back(x);
    return h;
}

Rational NSLattice::intersect(const DivisorClass& a, const DivisorClass& b) const {
    const std::size_t n = rank();
    if (a.coords.size() != n || b.coords.size() != n)
        throw StructuralError("divisor class length differs from the lattice rank");
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (gram_[i][j] != 0) s += a.coords[i] * Rational(gram_[i][j]) * b.coords[j];
    }
    return s;
}

bool is_nef(const NSLattice& lattice, const DivisorClass& alpha) {
    return lattice.intersect(alpha, alpha) >= 0 &&
           lattice.intersect(alpha, lattice.ample_class()) >= 0;
}

bool is_nef_along(const NSLattice& lattice, const DivisorClass& h, const DivisorClass& c,
                  const QuadIrrational& s) {
    const DivisorClass ref = lattice.ample_class();
    const Rational hh = lattice.intersect(h, h), hc = lattice.intersect(h, c),
                   cc = lattice.intersect(c, c);
    const QuadIrrational square = s * s * hh - s * Rational(2 * hc) + cc;
    const QuadIrrational degree = s * lattice.intersect(h, ref) - lattice.intersect(c, ref);
    return square.sign() >= 0 && degree.sign() >= 0;
}

// On the round cone, s*H - C leaves the negative cone, crosses the region of
// negative square between the two roots, and stays nef from the larger root
// on. Hodge index makes the discriminant nonnegative.
SInvariantResult s_invariant_divisorial(const NSLattice& lattice, const DivisorClass& h,
                                        const DivisorClass& c) {
    const Rational hh = lattice.intersect(h, h);
    const Rational href = lattice.intersect(h, lattice.ample_class());
    if (hh <= 0 || href <= 0) throw DomainError("H is not ample");
    const Rational hc = lattice.intersect(h, c), cc = lattice.intersect(c, c);

    SInvariantResult r;
    r.discriminant = hc * hc - hh * cc;
    if (r.discriminant < 0)
        throw InternalError("negative discriminant on a lattice of hyperbolic signature");
    if (is_nef_along(lattice, h, c, QuadIrrational())) {
        r.alreadyNef = true;
        r.s = QuadIrrational();
        r.probesVerified = true;
        return r;
    }
    r.s = (QuadIrrational(hc) + QuadIrrational::sqrt_of(r.discriminant)) / hh;
    r.irrational = !r.s.is_rational();

    r.probesVerified = is_nef_along(lattice, h, c, r.s);
    const Rational micro(1, 1000000);
    for (const Rational& q : {micro, Rational(micro / 1000), Rational(micro * micro)}) {
        const QuadIrrational probe = r.s - q;
        if (probe.sign() < 0) continue;
        if (is_nef_along(lattice, h, c, probe)) r.probesVerified = false;
    }
    return r;
}

RescaleReport rescale_check(const NSLattice& lattice, const DivisorClass& h,
                            const DivisorClass& c, int a, int b) {
    if (a < 1 || b < 0) throw DomainError("rescaling needs a >= 1 and b >= 0");
    DivisorClass ha = h, cb = c;
    for (std::size_t i = 0; i < h.coords.size(); ++i) {
        ha.coords[i] *= a;
        if (i < cb.coords.size()) cb.coords[i] += Rational(b) * h.coords[i];
    }
    RescaleReport r;
    r.original = s_invariant_divisorial(lattice, h, c).s;
    r.rescaled = s_invariant_divisorial(lattice, ha, cb).s;
    r.expected = (r.original + Rational(b)) / Rational(a);
    r.holds = r.rescaled == r.expected;
    return r;
}

}  // namespace sheafcx
