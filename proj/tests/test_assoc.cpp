#include "sheafcx/assoc.hpp"
#include "sheafcx/errors.hpp"
#include "sheafcx/newton.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

#include <doctest.h>

#include <set>

using namespace sheafcx;
using helpers::gens;
using helpers::ideal_of;

namespace {

std::vector<std::vector<std::size_t>> prime_sets(const std::vector<CoordinatePrime>& ps) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : ps) out.push_back(p.variables);
    return out;
}

using Sets = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST_SUITE("assoc") {
    TEST_CASE("decomposition examples") {
        const auto parts = irreducible_decomposition(ideal_of("x y z", "x^2, x*y"));
        REQUIRE(parts.size() == 2);
        std::set<std::string> g{gens(parts[0]), gens(parts[1])};
        CAPTURE(gens(parts[0]));
        CAPTURE(gens(parts[1]));
        CHECK(g == std::set<std::string>{"(x)", "(y, x^2)"});
        CHECK(prime_sets(associated_primes(ideal_of("x y z", "x^2, x*y"))) == Sets{{0}, {0, 1}});
        CHECK(prime_sets(associated_primes(ideal_of("x y", "x*y"))) == Sets{{0}, {1}});
        for (int d = 1; d <= 4; ++d)
            CHECK(prime_sets(associated_primes(suite::pathology(d))) == Sets{{0, 1}, {0, 1, 2}});
        CHECK_THROWS_AS(associated_primes(MonomialIdeal(Ring::standard(2))), DomainError);
        CHECK_THROWS_AS(associated_primes(MonomialIdeal::unit(Ring::standard(2))), DomainError);
    }

    TEST_CASE("decomposition recombines and primes match the colon oracle") {
        for (const auto& I : suite::random_ideals(50, 41)) {
            CAPTURE(I.to_string());
            const auto parts = irreducible_decomposition(I);
            CHECK(oracle::intersect_all(parts) == I);
            for (std::size_t a = 0; a < parts.size(); ++a)
                for (std::size_t b = 0; b < parts.size(); ++b)
                    if (a != b) CHECK_FALSE(contains_ideal(parts[a], parts[b]));
            CHECK(associated_primes(I) == oracle::associated_primes_by_colons(I));
        }
    }

    TEST_CASE("standard pairs examples") {
        const auto sp = standard_pairs(ideal_of("x y z", "x^2, x*y"));
        REQUIRE(sp.pairs.size() == 2);
        CHECK(sp.pairs[0].root.is_one());
        CHECK(sp.pairs[0].freeVariables == std::vector<std::size_t>{1, 2});
        CHECK(sp.pairs[1].root == Monomial({1, 0, 0}));
        CHECK(sp.pairs[1].freeVariables == std::vector<std::size_t>{2});

        const auto pt = standard_pairs(ideal_of("x y z", "x, y"));
        REQUIRE(pt.pairs.size() == 1);
        CHECK(pt.pairs[0].freeVariables == std::vector<std::size_t>{2});

        const auto q = standard_pairs(ideal_of("x y z", "x^2, x*y, y^2"));
        CHECK(q.bySize.at(1) == 3);
        CHECK(q.pairs.size() == 3);
    }

    TEST_CASE("standard pairs need not be disjoint") {
        const auto sp = standard_pairs(ideal_of("x y", "x*y"));
        REQUIRE(sp.pairs.size() == 2);
        CHECK(sp.pairs[0].root.is_one());
        CHECK(sp.pairs[1].root.is_one());
    }

    TEST_CASE("standard pairs are admissible, maximal and covering") {
        for (const auto& I : suite::random_ideals(50, 42)) {
            CAPTURE(I.to_string());
            CHECK(verify_standard_pairs(I, standard_pairs(I), 7));
        }
    }

    TEST_CASE("arithmetic degree") {
        const auto a = adeg_profile(ideal_of("x y z", "x^2, x*y"));
        CHECK(a.at(1) == 1);
        CHECK(a.at(2) == 1);
        const auto p = adeg_profile(ideal_of("x y z", "x, y"));
        CHECK(p.at(1) == 0);
        CHECK(p.at(2) == 1);
        for (int d = 1; d <= 6; ++d) {
            const auto r = adeg_profile(suite::pathology(d));
            CHECK(r.at(2) == 3);
            CHECK(r.at(3) == static_cast<std::size_t>(d));
        }
        for (const auto& I : suite::random_ideals(50, 43)) {
            const auto prof = adeg_profile(I);
            std::size_t total = 0;
            for (const auto& [k, v] : prof.byCodim) total += v;
            CHECK(total == standard_pairs(saturate(I)).pairs.size());
        }
        CHECK_THROWS_AS(adeg_profile(ideal_of("x y z", "x, y, z")), DomainError);
    }

    TEST_CASE("nilpotency") {
        CHECK(nilpotency_index(ideal_of("x y z", "x^2, x*y, y^2")).index == 2);
        CHECK(nilpotency_index(ideal_of("x y z", "x, y")).index == 1);
        for (int d = 1; d <= 6; ++d) CHECK(nilpotency_index(suite::pathology(d)).index == 3);
        for (const auto& I : suite::random_ideals(50, 44)) {
            CAPTURE(I.to_string());
            const auto r = nilpotency_index(I);
            const auto sat = saturate(I);
            const auto root = radical(sat);
            CHECK(contains_ideal(sat, power(root, r.index)));
            if (r.index >= 2) CHECK_FALSE(contains_ideal(sat, power(root, r.index - 1)));
            CHECK(r.boundHolds);
            for (int p = 1; p <= 3; ++p) {
                CHECK(r.inclusions.at(p).holds);
                CHECK(r.inclusions.at(p).exponent == r.rCoefficient * (static_cast<std::int64_t>(r.n) + p - 1));
            }
        }
    }

    TEST_CASE("least containing power") {
        const auto m = ideal_of("x y", "x, y");
        CHECK(least_containing_power(m, power(m, 3), 10) == 3);
        CHECK(least_containing_power(m, power(m, 3), 2) == -1);
        CHECK(least_containing_power(m, MonomialIdeal::unit(m.ring()), 2) == 0);
    }

    TEST_CASE("associated primes of closures are Rees centers") {
        for (const auto& I : suite::random_ideals(50, 45)) {
            const auto c = integral_closure(I);
            std::set<std::vector<std::size_t>> centers;
            for (const auto& v : rees_valuations(I)) centers.insert(v.center);
            for (const auto& p : associated_primes(c)) CHECK(centers.count(p.variables) == 1);
        }
    }
}
