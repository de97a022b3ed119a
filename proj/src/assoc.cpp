#include "sheafcx/assoc.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/homology.hpp"
#include "sheafcx/newton.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace sheafcx {

// ---------------------------------------------------------------- decomposition

namespace {

using Memo = std::unordered_map<std::string, std::vector<MonomialIdeal>>;

// Splits on a generator of mixed support: if g = x_i^a * h with h coprime to
// x_i, then I = (I + x_i^a) ∩ (I + h).
std::vector<MonomialIdeal> split(const MonomialIdeal& ideal, Memo& memo) {
    if (ideal.is_unit()) return {};
    const std::string key = canonical_key(ideal);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::size_t n = ideal.ring().num_variables();
    std::vector<MonomialIdeal> out;
    const Monomial* mixed = nullptr;
    for (const auto& g : ideal.generators())
        if (g.support().size() > 1) {
            mixed = &g;
            break;
        }
    if (!mixed) {
        out.push_back(ideal);
    } else {
        const std::size_t i = mixed->support().front();
        const Monomial pure = Monomial::variable(n, i, (*mixed)[i]);
        const Monomial rest = colon(*mixed, pure);
        for (const auto& part : {pure, rest}) {
            auto sub = split(sum(ideal, MonomialIdeal::from_generators(ideal.ring(), {part})), memo);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    memo.emplace(key, out);
    return out;
}

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::lexicographical_compare(
        a.generators().begin(), a.generators().end(), b.generators().begin(),
        b.generators().end(), [](const Monomial& x, const Monomial& y) { return canonical_less(x, y); });
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("irreducible decomposition of the zero or unit ideal is undefined");
    Memo memo;
    auto parts = split(ideal, memo);
    std::sort(parts.begin(), parts.end(), ideal_less);
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    // Drop any component containing another one.
    std::vector<MonomialIdeal> out;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < parts.size() && !redundant; ++b)
            if (a != b && contains_ideal(parts[a], parts[b])) redundant = true;
        if (!redundant) out.push_back(parts[a]);
    }
    return out;
}

std::vector<CoordinatePrime> associated_primes(const MonomialIdeal& ideal) {
    std::set<CoordinatePrime> primes;
    for (const auto& c : irreducible_decomposition(ideal)) {
        CoordinatePrime p;
        for (const auto& g : c.generators()) p.variables.push_back(g.support().front());
        std::sort(p.variables.begin(), p.variables.end());
        primes.insert(std::move(p));
    }
    return {primes.begin(), primes.end()};
}

// ---------------------------------------------------------------- standard pairs

namespace {

// Is a * x_free^k in I for some k? i.e. some generator divides a away from
// the free variables.
bool meets_ideal(const MonomialIdeal& ideal, const std::vector<std::int32_t>& a,
                 std::uint32_t freeMask) {
    const std::size_t n = a.size();
    for (const auto& g : ideal.generators()) {
        bool divides = true;
        for (std::size_t j = 0; j < n && divides; ++j)
            if (!(freeMask & (1u << j)) && g[j] > a[j]) divides = false;
        if (divides) return true;
    }
    return false;
}

bool is_standard_pair(const MonomialIdeal& ideal, const std::vector<std::int32_t>& a,
                      std::uint32_t freeMask) {
    const std::size_t n = a.size();
    if (meets_ideal(ideal, a, freeMask)) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (freeMask & (1u << j)) continue;
        std::vector<std::int32_t> shifted = a;
        shifted[j] = 0;
        if (!meets_ideal(ideal, shifted, freeMask | (1u << j))) return false;
    }
    return true;
}

std::vector<std::size_t> mask_to_vars(std::uint32_t mask, std::size_t n) {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) v.push_back(j);
    return v;
}

}  // namespace

// Roots of standard pairs satisfy a_i < max_i for every non-free variable,
// where max_i is the largest exponent of x_i among the generators: otherwise
// x_i can be freed. So each candidate set u is searched over a finite box.
StandardPairDecomposition standard_pairs(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("standard pairs of the zero or unit ideal are undefined");
    const std::size_t n = ideal.ring().num_variables();
    if (n > 30) throw ResourceError("standard pairs support at most 30 variables");
    std::vector<std::int32_t> top(n, 0);
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);

    StandardPairDecomposition sp;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::vector<std::int32_t> a(n, 0);
        bool empty = false;
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask & (1u << i)) && top[i] == 0) empty = true;
        if (empty) continue;
        auto walk = [&](auto&& self, std::size_t i) -> void {
            if (i == n) {
                if (is_standard_pair(ideal, a, mask))
                    sp.pairs.push_back({Monomial(a), mask_to_vars(mask, n)});
                return;
            }
            if (mask & (1u << i)) {
                self(self, i + 1);
                return;
            }
            for (std::int32_t k = 0; k < top[i]; ++k) {
                a[i] = k;
                self(self, i + 1);
            }
            a[i] = 0;
        };
        walk(walk, 0);
    }
    std::sort(sp.pairs.begin(), sp.pairs.end(), [](const StandardPair& x, const StandardPair& y) {
        if (x.freeVariables.size() != y.freeVariables.size())
            return x.freeVariables.size() > y.freeVariables.size();
        if (x.freeVariables != y.freeVariables) return x.freeVariables < y.freeVariables;
        return canonical_less(x.root, y.root);
    });
    for (const auto& p : sp.pairs) ++sp.bySize[p.freeVariables.size()];
    return sp;
}

bool verify_standard_pairs(const MonomialIdeal& ideal, const StandardPairDecomposition& sp,
                           int maxDegree) {
    const std::size_t n = ideal.ring().num_variables();
    std::vector<std::uint32_t> masks;
    for (const auto& p : sp.pairs) {
        std::uint32_t mask = 0;
        for (auto v : p.freeVariables) mask |= 1u << v;
        for (auto v : p.freeVariables)
            if (p.root[v] != 0) return false;
        if (!is_standard_pair(ideal, p.root.exponents(), mask)) return false;
        masks.push_back(mask);
    }
    for (int d = 0; d <= maxDegree; ++d)
        for (const auto& m : monomials_of_degree(n, d)) {
            if (contains(ideal, m)) continue;
            bool covered = false;
            for (std::size_t k = 0; k < sp.pairs.size() && !covered; ++k) {
                const auto& root = sp.pairs[k].root;
                bool ok = true;
                for (std::size_t j = 0; j < n && ok; ++j) {
                    if (masks[k] & (1u << j))
                        continue;
                    if (m[j] != root[j]) ok = false;
                }
                covered = ok;
            }
            if (!covered) return false;
        }
    return true;
}

// ---------------------------------------------------------------- adeg

std::size_t AdegProfile::at(int k) const {
    auto it = byCodim.find(k);
    return it == byCodim.end() ? 0 : it->second;
}

AdegProfile adeg_profile(const MonomialIdeal& ideal) {
    MonomialIdeal sat = require_proper_sheaf(
        ideal, "arithmetic degree of the zero or unit sheaf is undefined");
    const std::size_t numVars = sat.ring().num_variables();
    const auto sp = standard_pairs(sat);
    AdegProfile profile{{}, sat};
    for (std::size_t k = 1; k < numVars; ++k) profile.byCodim[static_cast<int>(k)] = 0;
    for (const auto& [size, count] : sp.bySize) {
        if (size == 0)
            throw InternalError("standard pair with no free variables survived saturation");
        profile.byCodim[static_cast<int>(numVars - size)] += count;
    }
    return profile;
}

// ---------------------------------------------------------------- nilpotency

int least_containing_power(const MonomialIdeal& base, const MonomialIdeal& target, int cap) {
    require_same_ring(base, target);
    if (target.is_unit()) return 0;
    MonomialIdeal current = base;
    for (int t = 1; t <= cap; ++t) {
        if (contains_ideal(target, current)) return t;
        if (t < cap) current = product(current, base);
    }
    return -1;
}

std::map<int, std::int64_t> NilpotencyReport::required_exponents() const {
    std::map<int, std::int64_t> out;
    for (const auto& [p, c] : inclusions) out[p] = c.exponent;
    return out;
}

std::map<int, bool> NilpotencyReport::inclusions_verified() const {
    std::map<int, bool> out;
    for (const auto& [p, c] : inclusions) out[p] = c.holds;
    return out;
}

NilpotencyReport nilpotency_index(const MonomialIdeal& ideal, int cap, int maxP) {
    const MonomialIdeal sat = require_proper_sheaf(
        ideal, "nilpotency index of the zero or unit sheaf is undefined");
    const MonomialIdeal root = radical(sat);

    NilpotencyReport report;
    report.n = sat.ring().projective_dimension();
    report.index = least_containing_power(root, sat, cap);
    if (report.index < 0)
        throw ResourceError("nilpotency index exceeds the cap of " + std::to_string(cap));
    report.rCoefficient = sheaf_r_coefficient(sat);
    report.boundHolds =
        report.index <= static_cast<std::int64_t>(report.n) * report.rCoefficient;

    const auto n = static_cast<std::int64_t>(report.n);
    for (int p = 1; p <= maxP; ++p) {
        const MonomialIdeal target = saturate(power(sat, p));
        const std::int64_t primary = report.rCoefficient * (n + p - 1);
        const std::int64_t alternate = report.rCoefficient * (n + 1 - p);
        const std::int64_t searchTo = std::max<std::int64_t>(primary, alternate);
        const int least = least_containing_power(root, target, static_cast<int>(searchTo));

        auto record = [&](std::int64_t exponent) {
            PowerInclusionCheck c;
            c.exponent = exponent;
            c.leastExponent = least;
            if (exponent <= 0)
                c.holds = target.is_unit();
            else
                c.holds = least >= 0 && least <= exponent;
            return c;
        };
        report.inclusions[p] = record(primary);
        report.alternateInclusions[p] = record(alternate);
    }
    return report;
}

}  // namespace sheafcx
