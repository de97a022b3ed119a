#include "sheafcx/errors.hpp"
#include "sheafcx/surface.hpp"

#include <doctest.h>

#include <cmath>

using namespace sheafcx;

namespace {

DivisorClass cls(std::initializer_list<int> v) {
    DivisorClass c;
    for (int x : v) c.coords.emplace_back(x);
    return c;
}

}  // namespace

TEST_SUITE("surface") {
    TEST_CASE("quadratic irrationals") {
        const auto r3 = QuadIrrational::sqrt_of(Rational(12));
        CHECK(r3.d() == 3);
        CHECK(r3.b() == 2);
        CHECK(QuadIrrational::sqrt_of(Rational(9, 4)).is_rational());
        CHECK(QuadIrrational::sqrt_of(Rational(9, 4)) == QuadIrrational(Rational(3, 2)));
        const QuadIrrational x(Rational(1), Rational(1), BigInt(2));
        CHECK(x * x == QuadIrrational(Rational(3), Rational(2), BigInt(2)));
        CHECK((x - x).sign() == 0);
        const QuadIrrational y(Rational(3, 2), Rational(-1), BigInt(2));
        CHECK(y.sign() == 1);
        CHECK(QuadIrrational(Rational(1, 2), Rational(-1), BigInt(2)).sign() == -1);
        CHECK(std::abs(x.to_double() - (1 + std::sqrt(2.0))) < 1e-12);
        CHECK_THROWS_AS(QuadIrrational(Rational(0), Rational(1), BigInt(-2)), DomainError);
    }

    TEST_CASE("inertia") {
        const auto s = inertia({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
        CHECK(s.positive == 1);
        CHECK(s.negative == 1);
        const auto e = inertia({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        CHECK(e.positive == 1);
        CHECK(e.negative == 2);
        CHECK_THROWS_AS(inertia({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}), StructuralError);
        CHECK_THROWS_AS(NSLattice({{1, 0}, {0, 1}}, {1, 0}), DomainError);
        CHECK_THROWS_AS(NSLattice({{1, 0}}, {1, 0}), StructuralError);
    }

    TEST_CASE("nef classes") {
        const auto lat = NSLattice::product_of_elliptic_curves();
        CHECK(is_nef(lat, cls({1, 0, 0})));
        CHECK(is_nef(lat, cls({1, 1, 1})));
        CHECK_FALSE(is_nef(lat, cls({-1, 0, 0})));
        CHECK_FALSE(is_nef(lat, cls({1, 1, -1})));
        CHECK(lat.intersect(cls({1, 2, 0}), cls({1, 2, 0})) == 4);
    }

    TEST_CASE("s-invariant examples") {
        const auto lat = NSLattice::product_of_elliptic_curves();
        const auto irr = s_invariant_divisorial(lat, cls({1, 2, 0}), cls({1, 1, 1}));
        CHECK(irr.s == QuadIrrational(Rational(3, 2), Rational(1, 2), BigInt(3)));
        CHECK(irr.irrational);
        CHECK(irr.probesVerified);
        CHECK_FALSE(irr.alreadyNef);

        const auto rat = s_invariant_divisorial(lat, cls({1, 1, 0}), cls({1, 1, 1}));
        CHECK(rat.s == QuadIrrational(Rational(3)));
        CHECK_FALSE(rat.irrational);
        CHECK(rat.probesVerified);

        const auto fibre = s_invariant_divisorial(lat, cls({1, 1, 0}), cls({1, 0, 0}));
        CHECK(fibre.s == QuadIrrational(Rational(1)));

        const auto zero = s_invariant_divisorial(lat, cls({1, 1, 0}), cls({-1, 0, 0}));
        CHECK(zero.alreadyNef);
        CHECK(zero.s == QuadIrrational(Rational(0)));

        CHECK_THROWS_AS(s_invariant_divisorial(lat, cls({1, 0, 0}), cls({1, 1, 1})), DomainError);
    }

    TEST_CASE("threshold is the nef boundary") {
        const auto lat = NSLattice::product_of_elliptic_curves();
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                const auto h = cls({1, 2, 1});
                const auto c = cls({i, j, 1});
                const auto r = s_invariant_divisorial(lat, h, c);
                CAPTURE(r.s.to_string());
                CHECK(is_nef_along(lat, h, c, r.s));
                if (!r.alreadyNef) {
                    CHECK_FALSE(is_nef_along(lat, h, c, r.s - QuadIrrational(Rational(1, 1000000))));
                    CHECK(r.probesVerified);
                }
            }
    }

    TEST_CASE("rescaling") {
        const auto lat = NSLattice::product_of_elliptic_curves();
        for (int a = 1; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) {
                const auto r = rescale_check(lat, cls({1, 2, 0}), cls({1, 1, 1}), a, b);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(r.holds);
                CHECK(r.rescaled == r.expected);
            }
        CHECK_THROWS_AS(rescale_check(lat, cls({1, 2, 0}), cls({1, 1, 1}), 0, 0), DomainError);
    }
}
