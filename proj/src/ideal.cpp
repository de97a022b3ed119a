#include "sheafcx/ideal.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sheafcx {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> variableNames) {
    if (variableNames.empty()) throw StructuralError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : variableNames) {
        if (n.empty()) throw StructuralError("empty variable name");
        if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
    }
    stride_ = kernels::padded_stride(variableNames.size());
    names_ = std::make_shared<const std::vector<std::string>>(std::move(variableNames));
}

Ring Ring::standard(std::size_t numVariables) {
    static const char* kShort[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < numVariables; ++i)
        names.push_back(numVariables <= 4 ? kShort[i] : "x" + std::to_string(i));
    return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::int32_t> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_)
        if (e < 0) throw StructuralError("negative exponent in monomial");
}

Monomial Monomial::one(std::size_t numVariables) {
    return Monomial(std::vector<std::int32_t>(numVariables, 0));
}

Monomial Monomial::variable(std::size_t numVariables, std::size_t index, std::int32_t power) {
    std::vector<std::int32_t> e(numVariables, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

Monomial Monomial::squarefree_part() const {
    std::vector<std::int32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::int32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::int32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::int32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
    std::vector<std::int32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, a[i] - b[i]);
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------- canonical form

namespace {

std::int64_t row_degree(const std::int32_t* row, std::size_t n) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < n; ++k) d += row[k];
    return d;
}

void check_length(const Monomial& m, const Ring& ring) {
    if (m.size() != ring.num_variables())
        throw StructuralError("monomial has " + std::to_string(m.size()) +
                              " exponents but the ring has " +
                              std::to_string(ring.num_variables()) + " variables");
}

std::vector<std::int32_t> pack(const std::vector<Monomial>& gens, const Ring& ring) {
    const std::size_t stride = ring.stride();
    std::vector<std::int32_t> rows(gens.size() * stride, 0);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        check_length(gens[r], ring);
        std::copy(gens[r].exponents().begin(), gens[r].exponents().end(),
                  rows.begin() + static_cast<std::ptrdiff_t>(r * stride));
    }
    return rows;
}

}  // namespace

// Sort candidate rows canonically, drop duplicates, and keep each row that no
// previously kept row divides. A divisor has degree at most that of its
// multiple, so scanning the kept prefix suffices.
MonomialIdeal adopt_rows(const Ring& ring, std::vector<std::int32_t> rows) {
    const std::size_t stride = ring.stride();
    const std::size_t n = ring.num_variables();
    const std::size_t count = rows.size() / stride;

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::int64_t> degrees(count);
    for (std::size_t r = 0; r < count; ++r) degrees[r] = row_degree(&rows[r * stride], n);

    auto rowLess = [&](std::size_t a, std::size_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        return std::lexicographical_compare(&rows[b * stride], &rows[b * stride] + n,
                                            &rows[a * stride], &rows[a * stride] + n);
    };
    std::sort(order.begin(), order.end(), rowLess);

    const auto& k = kernels::active();
    MonomialIdeal out(ring);
    out.packed_.reserve(std::min<std::size_t>(count, 256) * stride);
    std::size_t kept = 0;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const std::int32_t* row = &rows[order[idx] * stride];
        if (k.find_divisor(out.packed_.data(), kept, stride, row) >= 0) continue;
        out.packed_.insert(out.packed_.end(), row, row + stride);
        out.gens_.emplace_back(std::vector<std::int32_t>(row, row + n));
        ++kept;
    }
    return out;
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

MonomialIdeal MonomialIdeal::from_generators(const Ring& ring, std::vector<Monomial> gens) {
    return adopt_rows(ring, pack(gens, ring));
}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) {
    return from_generators(ring, {Monomial::one(ring.num_variables())});
}

MonomialIdeal MonomialIdeal::from_variables(const Ring& ring,
                                            const std::vector<std::size_t>& indices) {
    std::vector<Monomial> gens;
    for (auto i : indices) {
        if (i >= ring.num_variables()) throw StructuralError("variable index out of range");
        gens.push_back(Monomial::variable(ring.num_variables(), i));
    }
    return from_generators(ring, std::move(gens));
}

std::int64_t MonomialIdeal::max_generator_degree() const {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += sheafcx::to_string(gens_[i], ring_);
    }
    return out + ")";
}

// ---------------------------------------------------------------- operations

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw StructuralError("ideals belong to different rings");
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, const Ring& ring) {
    return MonomialIdeal::from_generators(ring, gens);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<std::int32_t> rows = a.packed();
    rows.insert(rows.end(), b.packed().begin(), b.packed().end());
    return adopt_rows(a.ring(), std::move(rows));
}

namespace {

template <typename Combine>
MonomialIdeal pairwise(const MonomialIdeal& a, const MonomialIdeal& b, Combine combine) {
    const std::size_t stride = a.ring().stride();
    const std::size_t na = a.num_generators(), nb = b.num_generators();
    std::vector<std::int32_t> rows(na * nb * stride);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            combine(&a.packed()[i * stride], &b.packed()[j * stride],
                    &rows[(i * nb + j) * stride], stride);
    return adopt_rows(a.ring(), std::move(rows));
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    return pairwise(a, b, kernels::active().add);
}

MonomialIdeal power(const MonomialIdeal& ideal, int p) {
    if (p < 1) throw DomainError("power requires p >= 1, got " + std::to_string(p));
    MonomialIdeal result = ideal;
    MonomialIdeal base = ideal;
    bool haveResult = false;
    for (int e = p; e > 0; e >>= 1) {
        if (e & 1) {
            result = haveResult ? product(result, base) : base;
            haveResult = true;
        }
        if (e > 1) base = product(base, base);
    }
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    return pairwise(a, b, kernels::active().lcm);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    check_length(m, ideal.ring());
    std::vector<Monomial> gens;
    gens.reserve(ideal.num_generators());
    for (const auto& g : ideal.generators()) gens.push_back(colon(g, m));
    return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

MonomialIdeal saturation_by(const MonomialIdeal& ideal, const MonomialIdeal& primeOfVariables) {
    require_same_ring(ideal, primeOfVariables);
    std::vector<std::size_t> vars;
    for (const auto& g : primeOfVariables.generators()) {
        if (g.degree() != 1)
            throw DomainError("saturation_by expects an ideal generated by variables");
        vars.push_back(g.support().front());
    }
    if (vars.empty() || ideal.is_zero()) return ideal;

    const std::size_t n = ideal.ring().num_variables();
    MonomialIdeal current = ideal;
    for (;;) {
        // (I : P) = intersection over x_i in P of (I : x_i)
        MonomialIdeal next = colon(current, Monomial::variable(n, vars.front()));
        for (std::size_t k = 1; k < vars.size(); ++k)
            next = intersect(next, colon(current, Monomial::variable(n, vars[k])));
        if (next == current) return current;
        current = std::move(next);
    }
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
    std::vector<std::size_t> all(ideal.ring().num_variables());
    std::iota(all.begin(), all.end(), 0);
    return saturation_by(ideal, MonomialIdeal::from_variables(ideal.ring(), all));
}

// m lies in (I : m_irr^inf) iff for each variable x_i some power m*x_i^k is in
// I, i.e. some generator divides m away from coordinate i.
bool saturation_contains(const MonomialIdeal& ideal, const Monomial& m) {
    const std::size_t n = ideal.ring().num_variables();
    check_length(m, ideal.ring());
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : ideal.generators()) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j)
                if (j != i && g[j] > m[j]) ok = false;
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.num_generators());
    for (const auto& g : ideal.generators()) gens.push_back(g.squarefree_part());
    return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    check_length(m, ideal.ring());
    std::vector<std::int32_t> row(ideal.ring().stride(), 0);
    std::copy(m.exponents().begin(), m.exponents().end(), row.begin());
    return kernels::active().find_divisor(ideal.packed().data(), ideal.num_generators(),
                                          ideal.ring().stride(), row.data()) >= 0;
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    require_same_ring(outer, inner);
    for (const auto& g : inner.generators())
        if (!contains(outer, g)) return false;
    return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t numVariables, int d) {
    std::vector<Monomial> out;
    if (d < 0 || numVariables == 0) return out;
    std::vector<std::int32_t> e(numVariables, 0);
    // Enumerate compositions of d into numVariables parts, lexicographically
    // descending (x^d first).
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == numVariables) {
            e[i] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> graded_piece(const MonomialIdeal& ideal, int d) {
    if (d < 0) throw DomainError("graded_piece requires d >= 0");
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(ideal.ring().num_variables(), d))
        if (contains(ideal, m)) out.push_back(std::move(m));
    return out;
}

std::string canonical_key(const MonomialIdeal& ideal) {
    std::ostringstream os;
    os << "ring";
    for (const auto& n : ideal.ring().variable_names()) os << ' ' << n;
    os << ";gens";
    for (const auto& g : ideal.generators()) {
        os << ' ';
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    }
    return os.str();
}

std::uint64_t canonical_hash(const MonomialIdeal& ideal) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_key(ideal)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace sheafcx
