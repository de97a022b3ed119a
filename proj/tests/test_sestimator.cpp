#include "sheafcx/errors.hpp"
#include "sheafcx/sestimator.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

#include <doctest.h>

using namespace sheafcx;
using helpers::ideal_of;

TEST_SUITE("sestimator") {
    TEST_CASE("d_p of small examples") {
        const auto pt = d_sequence(ideal_of("x y z", "x, y"), 4);
        for (int p = 1; p <= 4; ++p) {
            CHECK(pt.entries.at(p).dp == p);
            CHECK(pt.entries.at(p).regp == p);
        }
        for (int d = 1; d <= 3; ++d) {
            const auto seq = d_sequence(suite::pathology(d), 3);
            for (int p = 1; p <= 3; ++p) CHECK(seq.entries.at(p).dp == 2 * p + d);
            CHECK(seq.entries.at(1).regp == d + 2);
            CHECK(seq.subadditive());
        }
        CHECK_THROWS_AS(d_sequence(ideal_of("x y z", "x, y, z"), 2), DomainError);
        CHECK_THROWS_AS(d_sequence(MonomialIdeal(Ring::standard(3)), 2), DomainError);
    }

    TEST_CASE("d_p agrees with the generation-degree formula") {
        for (const auto& I : suite::random_ideals(25, 51)) {
            CAPTURE(I.to_string());
            const auto seq = d_sequence(I, 2);
            for (int p = 1; p <= 2; ++p) {
                CHECK(seq.entries.at(p).dp == oracle::generation_degree_formula(power(I, p)));
                CHECK(seq.entries.at(p).dp <= seq.entries.at(p).regp);
            }
        }
    }

    TEST_CASE("threads and resume give the same sequence") {
        const auto I = suite::pathology(2);
        const auto serial = d_sequence(I, 4);
        SequenceOptions opts;
        opts.threads = 3;
        const auto parallel = d_sequence(I, 4, opts);
        const auto partial = d_sequence(I, 2);
        const auto resumed = d_sequence(I, 4, {}, &partial);
        for (int p = 1; p <= 4; ++p) {
            CHECK(serial.entries.at(p).same_values(parallel.entries.at(p)));
            CHECK(serial.entries.at(p).same_values(resumed.entries.at(p)));
        }
        CHECK(resumed.entries.at(1).computedAt == partial.entries.at(1).computedAt);
    }

    TEST_CASE("resource caps name the power") {
        SequenceOptions opts;
        opts.homology.generatorCap = 2;
        try {
            d_sequence(ideal_of("x y z", "x^2, x*y, y^2"), 2, opts);
            FAIL("expected a ResourceError");
        } catch (const ResourceError& e) {
            CHECK(std::string(e.what()).rfind("p = 1: ", 0) == 0);
        }
    }

    TEST_CASE("curve bounds") {
        const auto w = curve_lower_bound(ideal_of("x y z", "x, y"));
        CHECK(w.bound == 1);
        CHECK(chart_valuation(ideal_of("x y z", "x, y"), 2, {1, 1}) == 1);
        for (int d = 1; d <= 6; ++d) CHECK(curve_lower_bound(suite::pathology(d)).bound == 2);
        const auto q = curve_lower_bound(ideal_of("x y z", "x^2, x*y, y^2"));
        CHECK(q.bound == 2);
        CHECK(q.valuation == 2);
        CHECK(q.degree == 1);
        // explicit candidates restrict the search
        const auto only = curve_lower_bound(ideal_of("x y z", "x, y"),
                                            std::vector<std::vector<std::int64_t>>{{1, 0}});
        CHECK(only.bound <= 1);
        CHECK_THROWS_AS(curve_lower_bound(ideal_of("x y z", "x, y"),
                                          std::vector<std::vector<std::int64_t>>{{1, 0, 0}}),
                        StructuralError);
    }

    TEST_CASE("brackets") {
        const auto b = s_bracket(ideal_of("x y z", "x, y"), 3, Rational(1, 100));
        CHECK(b.lower == 1);
        CHECK(b.upper == 1);
        CHECK(b.converged);
        const auto p = s_bracket(suite::pathology(2), 4, Rational(1, 100));
        CHECK(p.lower == 2);
        CHECK(p.upper == Rational(10, 4));
        CHECK_FALSE(p.converged);
        CHECK(brackets_overlap(b, b));
        CHECK_FALSE(brackets_overlap(b, p));
        CHECK_THROWS_AS(s_bracket(ideal_of("x y z", "x, y"), 0, Rational(1, 100)), DomainError);
        CHECK_THROWS_AS(s_bracket(ideal_of("x y z", "x, y"), 2, Rational(0)), DomainError);
    }

    TEST_CASE("brackets are consistent on random ideals") {
        for (const auto& I : suite::random_ideals(20, 52)) {
            CAPTURE(I.to_string());
            const auto b = s_bracket(I, 2, Rational(1, 100));
            CHECK(b.lower > 0);
            CHECK(b.lower <= b.upper);
            CHECK(b.upper == Rational(b.upperD, b.upperP));
        }
    }

    TEST_CASE("property checks") {
        const auto r = property_checks(ideal_of("x y z", "x, y"), ideal_of("x y z", "x^2, y"), 2);
        CHECK(r.all_hold());
        REQUIRE(r.sum.has_value());
        const auto q = property_checks(ideal_of("x y z", "x^2, y^2"), ideal_of("x y z", "x*y, z"), 2);
        CHECK(q.productBound);
        CHECK(q.firstClosureOverlap);
    }
}
