#include "sheafcx/cache.hpp"
#include "sheafcx/errors.hpp"
#include "sheafcx/io.hpp"
#include "sheafcx/report.hpp"
#include "support/helpers.hpp"
#include "support/suite.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace sheafcx;
using helpers::gens;
using helpers::ideal_of;

namespace fs = std::filesystem;

namespace {

void check_parse_error(const std::string& text, int line, int column, const std::string& fragment) {
    try {
        parse_ideal_document(text);
        FAIL("expected a ParseError for: " << text);
    } catch (const ParseError& e) {
        CAPTURE(e.what());
        CHECK(e.line() == line);
        CHECK(e.column() == column);
        CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sheafcx-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("parse a document") {
        const auto doc = parse_ideal_document(
            "# header\n"
            "ring x y z\n"
            "ideal J\n"
            "  @label quadrics\n"
            "  @expect reg 2\n"
            "  x^2, x*y   # trailing comment\n"
            "  y^2\n"
            "end\n"
            "ideal U\n"
            "  1\n"
            "end\n"
            "ideal Z\n"
            "end\n");
        CHECK(doc.ring.variable_names() == std::vector<std::string>{"x", "y", "z"});
        REQUIRE(doc.ideals.size() == 3);
        CHECK(gens(doc.find("J").ideal) == "(x^2, x*y, y^2)");
        CHECK(doc.find("J").labels == std::vector<std::string>{"quadrics"});
        CHECK(doc.find("J").expected.at("reg") == "2");
        CHECK(doc.find("U").ideal.is_unit());
        CHECK(doc.find("Z").ideal.is_zero());
        CHECK_THROWS_AS(doc.find("nope"), DomainError);
    }

    TEST_CASE("monomials") {
        const Ring r({"a", "b", "c"});
        CHECK(parse_monomial("a^3*c", r) == Monomial({3, 0, 1}));
        CHECK(parse_monomial("1", r).is_one());
        CHECK(parse_monomial("b*b", r) == Monomial({0, 2, 0}));
        CHECK_THROWS_AS(parse_monomial("d", r), ParseError);
    }

    TEST_CASE("parse errors carry positions") {
        check_parse_error("ring x y\nideal J\n  x, q\nend\n", 3, 6, "unknown variable");
        check_parse_error("ring x y\nideal J\n  x^\nend\n", 3, 5, "expected an exponent after '^'");
        check_parse_error("ring x y\nideal J\nx\nend\nideal J\ny\nend\n", 5, 7, "duplicate");
        check_parse_error("ring x y\nideal J\n  x\n", 4, 1, "end");
        check_parse_error("ideal J\nx\nend\n", 1, 1, "ring");
    }

    TEST_CASE("print and parse round trip") {
        std::mt19937_64 rng(suite::kSeed);
        for (int trial = 0; trial < 50; ++trial) {
            const auto ideals = suite::random_ideals(3, suite::kSeed + trial);
            IdealDocument doc{ideals[0].ring(), {}};
            int k = 0;
            for (const auto& I : ideals) {
                if (!(I.ring() == doc.ring)) continue;
                IdealEntry e{"I" + std::to_string(k++), I, {}, {}};
                if (suite::draw(rng, 0, 1)) e.labels.push_back("label " + std::to_string(trial));
                if (suite::draw(rng, 0, 1)) e.expected["reg"] = std::to_string(trial);
                doc.ideals.push_back(e);
            }
            const auto text = print_ideal_document(doc);
            CAPTURE(text);
            CHECK(parse_ideal_document(text) == doc);
        }
    }

    TEST_CASE("bundled files parse") {
        const auto docs = suite::bundled_ideals(SHEAFCX_DATA_DIR);
        CHECK(docs.size() >= 8);
        const auto lat = parse_lattice_document(read_text_file(std::string(SHEAFCX_DATA_DIR) + "/abelian.lattice"));
        CHECK(lat.lattice.rank() == 3);
        CHECK(lat.find("H").coords == std::vector<Rational>{1, 2, 0});
        const auto again = parse_lattice_document(print_lattice_document(lat));
        CHECK(again.lattice.gram() == lat.lattice.gram());
        CHECK(again.classes.size() == lat.classes.size());
        CHECK_THROWS_AS(read_text_file("/nonexistent/file.ideal"), DomainError);
    }

    TEST_CASE("lattice errors") {
        CHECK_THROWS_AS(parse_lattice_document("rank 2\ngram\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_lattice_document("rank 2\ngram\n1 0\n0 -1\nample 1 0\nclass C 1 x\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_lattice_document("rank 2\ngram\n1 0\n0 1\nample 1 0\n"), DomainError);
    }

    TEST_CASE("power entries round trip through JSON") {
        std::map<int, PowerEntry> e{{1, {3, 4, "t"}}, {2, {5, 6, "u"}}};
        const auto back = power_entries_from_json(power_entries_json(e));
        REQUIRE(back.size() == 2);
        CHECK(back.at(2).same_values(e.at(2)));
        CHECK_THROWS_AS(power_entries_from_json(Json::parse(R"({"x": {"dp": 1, "regp": 1}})")),
                        IntegrityError);
        CHECK_THROWS_AS(power_entries_from_json(Json::parse(R"({"1": {"dp": "a"}})")), IntegrityError);
    }

    TEST_CASE("cache") {
        TempDir dir;
        const auto I = ideal_of("x y z", "x^2, x*y, y^2");
        const auto file = cache_file(dir.path, I);
        CHECK(read_cache(file, I).empty());
        write_cache(file, I, {{1, {2, 2, "a"}}});
        const auto merged = write_cache(file, I, {{2, {4, 4, "b"}}});
        CHECK(merged.size() == 2);
        CHECK(read_cache(file, I).size() == 2);
        // same values with a new timestamp are not a conflict
        CHECK_NOTHROW(write_cache(file, I, {{1, {2, 2, "c"}}}));
        try {
            write_cache(file, I, {{1, {3, 2, "d"}}});
            FAIL("expected a conflict");
        } catch (const IntegrityError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("d=2") != std::string::npos);
            CHECK(msg.find("d=3") != std::string::npos);
        }
        const auto other = ideal_of("x y z", "x, y");
        fs::copy_file(file, cache_file(dir.path, other));
        CHECK_THROWS_AS(read_cache(cache_file(dir.path, other), other), IntegrityError);
        std::ofstream(file) << "{ not json";
        CHECK_THROWS_AS(read_cache(file, I), IntegrityError);
    }
}
