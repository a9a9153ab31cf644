#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "slopelab/cli.hpp"
#include "slopelab/constructions.hpp"
#include "slopelab/oracles.hpp"
#include "slopelab/psl2.hpp"

using namespace slopelab;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cmd_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string data_dir = SLOPELAB_DATA_DIR;

} // namespace

TEST_CASE("present and fill") {
    auto r = run({"present", "fig8"});
    CHECK(r.code == 0);
    CHECK(parse_presentation(r.out) == figure_eight());
    r = run({"fill", data_dir + "/trefoil.pres", "6"});
    CHECK(r.code == 0);
    CHECK(parse_presentation(r.out) == fill(torus_knot(2, 3), Slope(6, 1)));
    CHECK(run({"present", "torus", "2", "4"}).code == 1);
}

TEST_CASE("figure-eight scan report") {
    auto r = run({"scan", "fig8", "[a,h]", "--slopes", "-4..4", "denom", "1", "--jobs", "1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["knot"] == "fig8");
    CHECK(j["element"] == "a h a^-1 h^-1");
    REQUIRE(j["rows"].size() == 9);
    CHECK(j["rows"][0]["slope"] == "-4/1");
    CHECK(j["rows"][8]["slope"] == "4/1");
    for (const auto& row : j["rows"]) {
        CHECK(row["verdict"] != "trivial");
        if (row["verdict"] == "nontrivial")
            CHECK(replay_json(fill(figure_eight(), parse_slope(row["slope"].get<std::string>())), fig8_persistent(),
                              row["certificate"]));
    }
    CHECK(j["rows"][5]["certificate"]["target"] == "PSL2_7");

    auto again = run({"scan", "fig8", "[a,h]", "--slopes", "-4..4", "denom", "1", "--jobs", "2"});
    CHECK(again.out == r.out);
}

TEST_CASE("scan with a slope list and CSV") {
    auto r = run({"scan", "torus", "2", "3", "[x,y]", "--slopes", "7,inf,5,6", "--csv", "--max-cosets", "20000"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("slope,verdict,certificate,stage\n", 0) == 0);
    CHECK(r.out.find("5/1,trivial") != std::string::npos);
    CHECK(r.out.find("6/1,nontrivial,S3") != std::string::npos);
    CHECK(r.out.find("7/1,trivial") != std::string::npos);
    CHECK(r.out.find("1/0,trivial") != std::string::npos);
    CHECK(r.out.find("1/0") > r.out.find("7/1"));
}

TEST_CASE("certify a filled presentation file") {
    const auto path = std::filesystem::temp_directory_path() / "slopelab_trefoil_5.pres";
    {
        std::ofstream f(path);
        f << render_presentation(fill(torus_knot(2, 3), Slope(5, 1)));
    }
    auto r = run({"certify", path.string(), "[x,y]"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "trivial");
    CHECK(replay_json(load_presentation(path.string()), commutator(Word::generator("x"), Word::generator("y")),
                      j["certificate"]));

    r = run({"certify", path.string(), "x"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "nontrivial");
    CHECK(j["certificate"]["target"] == "homology");
    std::filesystem::remove(path);

    r = run({"certify", "torus", "2", "3", "[x,y]", "--slope", "6", "--sym-max", "3", "--psl2", "5"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["certificate"]["target"] == "S3");
    CHECK(j["meta"]["budget"]["psl2_primes"] == nlohmann::json::array({5}));
}

TEST_CASE("environment budget override") {
    setenv("SLOPELAB_MAX_COSETS", "1234", 1);
    auto r = run({"certify", "fig8", "[a,h]", "--slope", "3", "--sym-max", "4", "--psl2", "5"});
    unsetenv("SLOPELAB_MAX_COSETS");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["budget"]["max_cosets"] == 1234);
    r = run({"certify", "fig8", "[a,h]", "--slope", "3", "--max-cosets", "99", "--sym-max", "4", "--psl2", "5"});
    CHECK(nlohmann::json::parse(r.out)["meta"]["budget"]["max_cosets"] == 99);
}

TEST_CASE("builders") {
    auto r = run({"build", "torus-gn", "2", "3", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == render(torus_gn(2, 3, 1)) + "\n");
    CHECK(run({"build", "bmt", "a", "h"}).out == "h^-1 a^-1 h a h^-1 a h a^-2\n");
    CHECK(run({"build", "powered", "a", "b", "-1", "2"}).out == "a^-1 b^2\n");
    CHECK(run({"build", "sep-combine", "a", "b", "1", "1", "1"}).out == "a^2 b\n");
    CHECK(run({"build", "alpha-m", "g", "s", "2", "1"}).out == "g^3 s g^-1 s^-1\n");
    CHECK(run({"build", "sep-comm", "1", "[a,h]", "a^3"}).out == render(commutator(fig8_persistent(), Word::generator("a", 3))) + "\n");
    CHECK(run({"build", "nonsense"}).code == 1);
    CHECK(run({"build", "powered", "a", "b", "0", "1"}).code == 1);
}

TEST_CASE("holonomy queries") {
    auto j = nlohmann::json::parse(run({"holonomy", "trace", "a"}).out);
    CHECK(j["trace"][0] == 2.0);
    j = nlohmann::json::parse(run({"holonomy", "peripheral", "a^3 (h a^-1 h^-1 a^2 h^-1 a^-1 h)^2"}).out);
    CHECK(j["peripheral"] == true);
    j = nlohmann::json::parse(run({"holonomy", "peripheral", "[a,h]"}).out);
    CHECK(j["peripheral"] == false);
    j = nlohmann::json::parse(run({"holonomy", "invariant", "peripheral", "2", "1"}).out);
    CHECK(j["value"][0] == 34.0);

    const auto path = std::filesystem::temp_directory_path() / "slopelab_rep.json";
    {
        std::ofstream f(path);
        f << representation_json(fig8_holonomy()).dump();
    }
    auto r = run({"holonomy", "peripheral", "a", "--rep", path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("relator_check") != std::string::npos);
    r = run({"holonomy", "peripheral", "a", "--rep", path.string(), "--against", "fig8"});
    CHECK(r.code == 0);
    std::filesystem::remove(path);
}

TEST_CASE("quasimorphism queries") {
    CHECK(nlohmann::json::parse(run({"qm", "count", "a b", "a b a b"}).out)["count"] == 2);
    CHECK(nlohmann::json::parse(run({"qm", "homog", "a", "a", "--power", "8"}).out)["estimate"] == 1.0);
    auto j = nlohmann::json::parse(run({"qm", "bavard", "a b", "(a b)^2", "--defect-bound", "2"}).out);
    CHECK(j["kind"] == "heuristic-lower");
    CHECK(run({"qm", "bavard", "a b", "a", "--defect-bound", "0"}).code == 1);
    CHECK(run({"qm", "defect", "a b", "a", "b"}).code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"scan", "fig8", "[a,h]"}).code == 1);
    CHECK(run({"certify", "fig8", "[a,q]"}).code == 1);
    CHECK(run({"certify", "fig8", "a", "--bogus", "1"}).code == 1);
    CHECK(run({"fill", "/nonexistent/file.pres", "1"}).code == 1);
    auto r = run({"scan", "fig8", "a", "--slopes", "1..x"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
}
