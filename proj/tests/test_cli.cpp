#include "sheafcx/cli.hpp"
#include "sheafcx/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace sheafcx;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SHEAFCX_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        CHECK(run({"info", data("point.ideal")}).code == kExitOk);
        CHECK(run({"--help"}).code == kExitOk);
        CHECK(run({"nonsense"}).code == kExitParse);
        CHECK(run({"reg"}).code == kExitParse);
        CHECK(run({"reg", "/nonexistent.ideal"}).code == kExitDomain);
        CHECK(run({"reg", data("plane.ideal"), "--ideal", "nope"}).code == kExitDomain);
        CHECK(run({"pathology", "--d-range", "x..y"}).code == kExitParse);
        CHECK(run({"sinv", data("point.ideal"), "--pmax", "0"}).code == kExitParse);
        CHECK(run({"surface", data("abelian.lattice"), "--H", "f1"}).code == kExitDomain);
        CHECK(run({"bezout", data("plane.ideal")}).code == kExitDomain);
        CHECK(run({"bezout", data("plane.ideal"), "--s", "abc"}).code == kExitParse);
    }

    TEST_CASE("regularity of the zero ideal is an error") {
        const auto r = run({"reg", data("plane.ideal"), "--ideal", "Z"});
        CHECK(r.code == kExitDomain);
        CHECK(r.err.find("regularity of the zero or unit sheaf") != std::string::npos);
    }

    TEST_CASE("reduced point") {
        const auto r = run({"sinv", data("point.ideal")});
        REQUIRE(r.code == kExitOk);
        CHECK(r.out.find("s in [1, 1]  converged") != std::string::npos);
        const auto j = run({"--json", "sinv", data("point.ideal")});
        REQUIRE(j.code == kExitOk);
        const auto doc = Json::parse(j.out);
        CHECK(doc["command"] == "sinv");
        CHECK(doc["results"]["lower"]["exact"] == "1");
        CHECK(doc["results"]["upper"]["exact"] == "1");
        CHECK(doc["versions"]["sheafcx"] == kVersion);
    }

    TEST_CASE("every ideal command emits JSON") {
        for (const std::string cmd : {"info", "reg", "gendeg", "power", "rees", "closure", "bezout",
                                      "adeg", "nilp", "sinv", "props"}) {
            CAPTURE(cmd);
            std::vector<std::string> args{"--json", cmd, data("plane.ideal"), "--ideal", "Q"};
            if (cmd == "bezout") args.push_back("--from-bracket");
            const auto r = run(args);
            CHECK(r.code == kExitOk);
            CHECK(Json::accept(r.out));
        }
        const auto s = run({"--json", "surface", data("abelian.lattice"), "--a", "2", "--b", "1"});
        CHECK(s.code == kExitOk);
        CHECK(Json::accept(s.out));
    }

    TEST_CASE("pathology table") {
        const auto r = run({"pathology", "--d-range", "1..3"});
        REQUIRE(r.code == kExitOk);
        CHECK(r.out.find("   1        2        -      3      1    3     3") != std::string::npos);
        CHECK(r.out.find("   3        2        -      3      3    5     3") != std::string::npos);
        const auto j = run({"--json", "pathology", "--d-range", "2..2", "--pmax", "2"});
        REQUIRE(j.code == kExitOk);
        CHECK(Json::accept(j.out));
    }

    TEST_CASE("cache directory is used") {
        const auto dir = std::filesystem::temp_directory_path() / "sheafcx-cli-cache";
        std::filesystem::remove_all(dir);
        CHECK(run({"sinv", data("space.ideal"), "--ideal", "J2", "--cache", dir.string()}).code == kExitOk);
        CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) >= 1);
        CHECK(run({"sinv", data("space.ideal"), "--ideal", "J2", "--cache", dir.string(), "--pmax", "4"})
                  .code == kExitOk);
        std::filesystem::remove_all(dir);
    }
}
