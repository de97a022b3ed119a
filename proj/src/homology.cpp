#include "sheafcx/homology.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/linalg.hpp"

#include <algorithm>
#include <set>

namespace sheafcx {

// ---------------------------------------------------------------- lattice

std::ptrdiff_t LcmLattice::index_of(const Monomial& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || !(*it == m)) return -1;
    return it - elements.begin();
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const HomologyOptions& options) {
    if (ideal.is_zero()) throw DomainError("the lcm lattice of the zero ideal is undefined");
    const auto& gens = ideal.generators();
    if (gens.size() > options.generatorCap)
        throw ResourceError("lcm lattice: " + std::to_string(gens.size()) +
                            " generators exceed the cap of " +
                            std::to_string(options.generatorCap));

    std::set<Monomial> seen(gens.begin(), gens.end());
    std::vector<Monomial> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                Monomial j = lcm(e, g);
                if (seen.insert(j).second) {
                    if (seen.size() > options.latticeCap)
                        throw ResourceError("lcm lattice exceeds the cap of " +
                                            std::to_string(options.latticeCap) + " elements");
                    next.push_back(std::move(j));
                }
            }
        frontier = std::move(next);
    }

    LcmLattice lattice;
    lattice.bottom = Monomial::one(ideal.ring().num_variables());
    lattice.elements.assign(seen.begin(), seen.end());
    lattice.atomLabels.resize(lattice.elements.size());
    for (std::size_t e = 0; e < lattice.elements.size(); ++e)
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (gens[g].divides(lattice.elements[e])) lattice.atomLabels[e].push_back(g);
    return lattice;
}

// ---------------------------------------------------------------- Betti table

void BettiTable::set(int i, const Monomial& b, std::size_t rank) {
    if (rank == 0)
        entries_.erase({i, b});
    else
        entries_[{i, b}] = rank;
}

std::size_t BettiTable::at(int i, const Monomial& b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
    std::size_t t = 0;
    for (const auto& [key, rank] : entries_)
        if (key.first == i) t += rank;
    return t;
}

int BettiTable::max_index() const {
    int m = -1;
    for (const auto& [key, rank] : entries_) m = std::max(m, key.first);
    return m;
}

// ---------------------------------------------------------------- homology

std::vector<std::size_t> reduced_homology(const std::vector<std::vector<std::size_t>>& faces) {
    if (faces.empty()) return {};
    std::size_t maxSize = 0;
    for (const auto& f : faces) maxSize = std::max(maxSize, f.size());

    // byDim[s] lists faces with s vertices (dimension s - 1), sorted.
    std::vector<std::vector<std::vector<std::size_t>>> bySize(maxSize + 1);
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        bySize[f.size()].push_back(std::move(f));
    }
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(maxSize + 1);
    for (std::size_t s = 0; s <= maxSize; ++s) {
        std::sort(bySize[s].begin(), bySize[s].end());
        bySize[s].erase(std::unique(bySize[s].begin(), bySize[s].end()), bySize[s].end());
        for (std::size_t k = 0; k < bySize[s].size(); ++k) index[s][bySize[s][k]] = k;
    }

    // rankBoundary[s] = rank of the map from faces of size s to faces of size s-1.
    std::vector<std::size_t> rankBoundary(maxSize + 2, 0);
    for (std::size_t s = 1; s <= maxSize; ++s) {
        if (bySize[s].empty()) continue;
        if (bySize[s - 1].empty()) throw StructuralError("face list is not closed under taking subsets");
        IntMatrix d(bySize[s - 1].size(), bySize[s].size());
        for (std::size_t c = 0; c < bySize[s].size(); ++c) {
            const auto& face = bySize[s][c];
            for (std::size_t j = 0; j < face.size(); ++j) {
                std::vector<std::size_t> sub;
                sub.reserve(face.size() - 1);
                for (std::size_t t = 0; t < face.size(); ++t)
                    if (t != j) sub.push_back(face[t]);
                auto it = index[s - 1].find(sub);
                if (it == index[s - 1].end())
                    throw StructuralError("face list is not closed under taking subsets");
                d(it->second, c) = (j % 2 == 0) ? 1 : -1;
            }
        }
        rankBoundary[s] = rank_over_rationals(d);
    }

    std::vector<std::size_t> ranks(maxSize + 1, 0);
    for (std::size_t s = 0; s <= maxSize; ++s)
        ranks[s] = bySize[s].size() - rankBoundary[s] - rankBoundary[s + 1];
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

std::vector<std::size_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& b) {
    const auto support = b.support();
    std::vector<std::vector<std::size_t>> faces;
    const std::size_t subsets = std::size_t{1} << support.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::int32_t> e = b.exponents();
        std::vector<std::size_t> face;
        for (std::size_t k = 0; k < support.size(); ++k)
            if (mask & (std::size_t{1} << k)) {
                --e[support[k]];
                face.push_back(support[k]);
            }
        if (contains(ideal, Monomial(std::move(e)))) faces.push_back(std::move(face));
    }
    return reduced_homology(faces);
}

BettiTable betti_numbers(const MonomialIdeal& ideal, const HomologyOptions& options) {
    const LcmLattice lattice = lcm_lattice(ideal, options);
    BettiTable table;
    for (const auto& b : lattice.elements) {
        const auto h = koszul_homology(ideal, b);
        for (std::size_t k = 0; k < h.size(); ++k)
            table.set(static_cast<int>(k), b, h[k]);  // h[k] = H~_{k-1} = beta_k
    }
    return table;
}

namespace {

std::vector<std::size_t> interval_members(const LcmLattice& lattice, const Monomial& b) {
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < lattice.elements.size(); ++e) {
        const auto& m = lattice.elements[e];
        if (m.divides(b) && !(m == b)) members.push_back(e);
    }
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t c) {
        return lattice.elements[a].degree() < lattice.elements[c].degree();
    });
    return members;
}

}  // namespace

std::vector<std::size_t> interval_chain_counts(const LcmLattice& lattice, const Monomial& b) {
    const auto members = interval_members(lattice, b);
    const std::size_t m = members.size();
    std::vector<std::size_t> f{1};
    // ends[k][e] = chains with k+1 elements whose top is members[e]
    std::vector<std::size_t> ends(m, 1);
    while (true) {
        std::size_t total = 0;
        for (auto c : ends) total += c;
        if (total == 0) break;
        f.push_back(total);
        std::vector<std::size_t> next(m, 0);
        for (std::size_t top = 0; top < m; ++top)
            for (std::size_t below = 0; below < top; ++below) {
                const auto& lo = lattice.elements[members[below]];
                const auto& hi = lattice.elements[members[top]];
                if (lo.divides(hi) && !(lo == hi)) next[top] += ends[below];
            }
        ends = std::move(next);
    }
    return f;
}

std::vector<std::size_t> interval_homology(const LcmLattice& lattice, const Monomial& b,
                                           std::size_t chainCap) {
    const auto members = interval_members(lattice, b);
    std::vector<std::vector<std::size_t>> faces{{}};
    std::vector<std::size_t> chain;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t next = from; next < members.size(); ++next) {
            if (!chain.empty()) {
                const auto& lo = lattice.elements[chain.back()];
                const auto& hi = lattice.elements[members[next]];
                if (!lo.divides(hi) || lo == hi) continue;
            }
            chain.push_back(members[next]);
            faces.push_back(chain);
            if (faces.size() > chainCap)
                throw ResourceError("order complex exceeds " + std::to_string(chainCap) + " chains");
            self(self, next + 1);
            chain.pop_back();
        }
    };
    extend(extend, 0);
    return reduced_homology(faces);
}

// ---------------------------------------------------------------- regularity

MonomialIdeal require_proper_sheaf(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw DomainError(what);
    MonomialIdeal sat = saturate(ideal);
    if (sat.is_unit()) throw DomainError(what);
    return sat;
}

RegularityReport regularity(const MonomialIdeal& ideal, const HomologyOptions& options) {
    MonomialIdeal sat =
        require_proper_sheaf(ideal, "regularity of the zero or unit sheaf is −∞");
    RegularityReport report{0, 0, Monomial{}, sat, betti_numbers(sat, options)};
    bool first = true;
    for (const auto& [key, rank] : report.betti.entries()) {
        const int value = static_cast<int>(key.second.degree()) - key.first;
        if (first || value > report.moduleRegularity) {
            report.moduleRegularity = value;
            report.witnessIndex = key.first;
            report.witnessDegree = key.second;
            first = false;
        }
    }
    return report;
}

int generation_degree(const MonomialIdeal& ideal) {
    const MonomialIdeal sat = require_proper_sheaf(
        ideal, "generation degree of the zero or unit sheaf is undefined");
    // Truncations at d >= the top generator degree always generate the sheaf.
    const int top = static_cast<int>(sat.max_generator_degree());
    for (int d = 0; d <= top; ++d) {
        const MonomialIdeal truncated =
            MonomialIdeal::from_generators(sat.ring(), graded_piece(sat, d));
        if (truncated.is_zero()) continue;
        bool generates = true;
        for (const auto& g : sat.generators())
            if (!saturation_contains(truncated, g)) {
                generates = false;
                break;
            }
        if (generates) return d;
    }
    throw InternalError("generation degree search passed the top generator degree");
}

}  // namespace sheafcx
