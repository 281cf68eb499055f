#include "hdepth/cli.hpp"

#include "json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string text;
    json first;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::ostringstream out;
    std::istringstream in(input);
    const int code = hdepth::cli::run(args, out, in);
    Result r{code, out.str(), {}};
    std::istringstream lines(r.text);
    std::string line;
    std::getline(lines, line);
    r.first = json::parse(line);
    return r;
}

const char* const example31 =
    R"({"alpha":3,"beta":5,"terms":[{"shift":0,"coeff":1,"denom":["alpha","beta"]},)"
    R"({"shift":1,"coeff":1,"denom":[]},{"shift":2,"coeff":1,"denom":[]}]})";

const char* const five_atoms =
    R"({"alpha":3,"beta":4,"numerator":[[0,1],[1,1],[6,1],[7,1],[8,1]],"den_alpha":1,"den_beta":0})";

} // namespace

TEST_CASE("semigroup subcommand")
{
    const auto r = run({"semigroup", "3", "5"});
    CHECK(r.code == 0);
    CHECK(r.first["gaps"] == json::array({1, 2, 4, 7}));
    CHECK(r.first["conductor"] == 8);
    CHECK(r.first["genus"] == 4);
    CHECK(r.first["apery_alpha"] == json::array({0, 5, 10}));
    const auto bad = run({"semigroup", "6", "10"});
    CHECK(bad.code == 2);
    CHECK(bad.first["error"] == "NonCoprime");
}

TEST_CASE("couples subcommand")
{
    CHECK(run({"couples", "11", "13", "--count"}).first == json{{"count", 104006}});
    const auto list = run({"couples", "3", "5"});
    CHECK(list.first["couples"].size() == 7);
    const auto lines = run({"couples", "3", "5", "--jsonl", "--limit", "3"});
    CHECK(std::count(lines.text.begin(), lines.text.end(), '\n') == 3);
    CHECK(lines.first == json{{"I", {0}}, {"J", {15}}});
}

TEST_CASE("check, depth, decompose and pd")
{
    const auto c = run({"check", "-"}, example31);
    CHECK(c.code == 0);
    CHECK(c.first["holds"] == false);
    CHECK(c.first["violation"] == json{{"I", {0, 1}}, {"J", {6, 10}}, {"n", 1}, {"lhs", 2}, {"rhs", 1}});
    CHECK(run({"--quiet-status", "check", "-"}, example31).code == 1);

    const auto d = run({"depth", "-"}, example31);
    CHECK(d.first["hdep"] == 0);
    const auto d29 = run({"depth", "-"}, five_atoms);
    CHECK(d29.first["hdep"] == 1);
    CHECK(d29.first["witness"]["provenance"] == "dim1_greedy");

    const auto dc = run({"decompose", "-"}, five_atoms);
    CHECK(dc.code == 0);
    CHECK(dc.first["decomposable"] == true);
    CHECK(dc.first["witness_module"] == "R/(Y) ⊕ (R/(Y))(−1) ⊕ (R/(Y))(−6) ⊕ (R/(Y))(−7) ⊕ (R/(Y))(−8)");
    const auto dn = run({"decompose", "-"}, example31);
    CHECK(dn.first["decomposable"] == false);
    CHECK(dn.first["reason"] == "StarFails");

    CHECK(run({"pd", "-"}, example31).first == json{{"d", 15}, {"pd", 1}});
    CHECK(run({"pd", "-", "--d", "3"}, five_atoms).first["pd"] == 1);
}

TEST_CASE("decompose output round-trips through check")
{
    const auto dir = std::filesystem::temp_directory_path() / "hdepth_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "witness.json").string();
    const auto dc = run({"decompose", "-", "-o", path}, five_atoms);
    REQUIRE(dc.code == 0);
    std::ifstream f(path);
    const json written = json::parse(f);
    CHECK(written == dc.first);
    // The atom list is itself a valid series document describing the same series.
    const auto again = run({"check", "-"}, dc.first.dump());
    CHECK(again.first["holds"] == true);
    CHECK(run({"pd", "-", "--d", "3"}, dc.first.dump()).first["pd"] == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("non-coprime weights")
{
    const std::string doc = R"({"alpha":2,"beta":4,"numerator":[[0,1]],"den_alpha":1,"den_beta":1})";
    const auto c = run({"check", "-"}, doc);
    CHECK(c.code == 0);
    CHECK(c.first["delta"] == 2);
    CHECK(run({"depth", "-"}, doc).code == 0);
    CHECK(run({"decompose", "-"}, doc).code == 2);
}

TEST_CASE("input errors are reported as JSON")
{
    CHECK(run({"check", "-"}, "{not json").first.contains("error"));
    CHECK(run({"check", "-"}, "{not json").code == 2);
    const auto both = run({"check", "-"}, R"({"alpha":3,"beta":5,"terms":[],"numerator":[]})");
    CHECK(both.code == 2);
    CHECK(both.first["error"] == "Schema");
    CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto neg = run({"check", "-"}, R"({"alpha":3,"beta":5,"numerator":[[0,-1]],"den_alpha":0,"den_beta":0})");
    CHECK(neg.first["error"] == "NotNonnegative");
}

TEST_CASE("selftest and determinism")
{
    const auto a = run({"selftest", "--quick", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.first["passed"] == true);
    CHECK(run({"selftest", "--quick", "--seed", "3"}).text == a.text);
    CHECK(run({"check", "-"}, example31).text == run({"check", "-"}, example31).text);
}
