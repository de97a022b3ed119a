#include "sheafcx/errors.hpp"
#include "sheafcx/ideal.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

#include <doctest.h>

using namespace sheafcx;
using helpers::gens;
using helpers::ideal_of;

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k)
        for (auto& m : monomials_of_degree(n, k)) out.push_back(std::move(m));
    return out;
}

}  // namespace

TEST_SUITE("ideal") {
    TEST_CASE("ring construction") {
        CHECK(Ring::standard(3).variable_names() == std::vector<std::string>{"x", "y", "z"});
        CHECK(Ring::standard(5).name(4) == "x4");
        CHECK(Ring::standard(3).projective_dimension() == 2);
        CHECK_THROWS_AS(Ring(std::vector<std::string>{}), StructuralError);
        CHECK_THROWS_AS(Ring({"x", "x"}), StructuralError);
    }

    TEST_CASE("minimalization and canonical order") {
        const Ring r = Ring::standard(2);
        CHECK(gens(MonomialIdeal::from_generators(
                  r, {Monomial({2, 0}), Monomial({3, 0}), Monomial({1, 1})})) == "(x^2, x*y)");
        CHECK(MonomialIdeal::from_generators(r, {}).is_zero());
        CHECK(gens(ideal_of("x y", "x, y, x*y")) == "(x, y)");
        CHECK(gens(ideal_of("x y", "y^2, x*y, x^2")) == "(x^2, x*y, y^2)");
        CHECK(gens(ideal_of("x y", "y^3, x")) == "(x, y^3)");
        CHECK_THROWS_AS(MonomialIdeal::from_generators(r, {Monomial({1, 0, 0})}), StructuralError);
        CHECK_THROWS_AS(Monomial({-1, 0}), StructuralError);
    }

    TEST_CASE("sums, products and powers") {
        CHECK(gens(sum(ideal_of("x y", "x^2"), ideal_of("x y", "x*y"))) == "(x^2, x*y)");
        const auto I = ideal_of("x y z", "x^2, y*z");
        CHECK(sum(I, MonomialIdeal(I.ring())) == I);
        CHECK(gens(sum(ideal_of("x y", "x"), ideal_of("x y", "x^2*y"))) == "(x)");
        CHECK(gens(power(ideal_of("x y", "x, y"), 2)) == "(x^2, x*y, y^2)");
        CHECK(gens(product(ideal_of("x y", "x"), ideal_of("x y", "y"))) == "(x*y)");
        const auto J = suite::pathology(3);
        CHECK(contains(power(J, 2), Monomial({3, 1, 3, 0})));
        CHECK_THROWS_AS(power(J, 0), DomainError);
        CHECK_THROWS_AS(sum(ideal_of("x y", "x"), ideal_of("x y z", "x")), StructuralError);
    }

    TEST_CASE("power equals iterated product") {
        for (const auto& I : suite::random_ideals(20)) {
            MonomialIdeal acc = I;
            for (int p = 2; p <= 4; ++p) {
                acc = product(acc, I);
                CHECK(power(I, p) == acc);
            }
        }
    }

    TEST_CASE("intersection and colon by membership") {
        for (const auto& I : suite::random_ideals(15, 7)) {
            const auto J = suite::random_ideals(1, canonical_hash(I))[0];
            if (!(J.ring() == I.ring())) continue;
            const auto meet = intersect(I, J);
            for (const auto& m : monomials_up_to(I.ring().num_variables(), 6))
                CHECK(contains(meet, m) == (contains(I, m) && contains(J, m)));
        }
        for (const auto& I : suite::random_ideals(15, 8)) {
            const std::size_t n = I.ring().num_variables();
            for (const auto& m : monomials_up_to(n, 2)) {
                const auto q = colon(I, m);
                for (const auto& u : monomials_up_to(n, 4)) CHECK(contains(q, u) == contains(I, u * m));
            }
        }
        CHECK(gens(colon(ideal_of("x y", "x^2, x*y"), Monomial({0, 1}))) == "(x)");
    }

    TEST_CASE("saturation") {
        CHECK(gens(saturate(ideal_of("x y z", "x^2, x*y, x*z"))) == "(x)");
        CHECK(gens(saturate(ideal_of("x y z", "x^2, x*y"))) == "(x^2, x*y)");
        const auto P = MonomialIdeal::from_variables(Ring::standard(3), {0, 1, 2});
        CHECK(gens(saturation_by(ideal_of("x y z", "x^2, x*y, x*z"), P)) == "(x)");
        for (int d = 1; d <= 5; ++d) CHECK(saturate(suite::pathology(d)) == suite::pathology(d));
        CHECK(saturate(MonomialIdeal(Ring::standard(2))).is_zero());
        CHECK_THROWS_AS(saturation_by(ideal_of("x y", "x"), ideal_of("x y", "x*y")), DomainError);
    }

    TEST_CASE("saturation agrees with the shifting oracle") {
        for (const auto& I : suite::random_ideals(40, 11)) {
            const auto S = saturate(I);
            for (const auto& m : monomials_up_to(I.ring().num_variables(), 6)) {
                const bool expect = oracle::saturation_member(I, m);
                CHECK(contains(S, m) == expect);
                CHECK(saturation_contains(I, m) == expect);
            }
        }
    }

    TEST_CASE("radical, membership, graded pieces") {
        CHECK(gens(radical(ideal_of("x y", "x^2, y^3"))) == "(x, y)");
        CHECK_FALSE(contains(ideal_of("x y z", "x^2, x*y"), Monomial({1, 0, 5})));
        CHECK(graded_piece(ideal_of("x y", "x"), 2) ==
              std::vector<Monomial>{Monomial({2, 0}), Monomial({1, 1})});
        for (const auto& I : suite::random_ideals(20, 12)) {
            const auto R = radical(I);
            const int k = static_cast<int>(I.max_generator_degree()) + 1;
            for (const auto& m : monomials_up_to(I.ring().num_variables(), 4)) {
                Monomial mk = m;
                for (int t = 1; t < k * 4; ++t) mk = mk * m;
                CHECK(contains(R, m) == contains(I, mk));
            }
        }
    }

    TEST_CASE("canonical key and hash") {
        const auto a = ideal_of("x y z", "x^2, x*y");
        const auto b = ideal_of("x y z", "x*y, x^2, x^3");
        CHECK(canonical_key(a) == canonical_key(b));
        CHECK(canonical_hash(a) == canonical_hash(b));
        CHECK(canonical_hash(a) != canonical_hash(ideal_of("x y z", "x^2")));
        CHECK(canonical_key(a) != canonical_key(ideal_of("a b c", "a^2, a*b")));
    }
}
