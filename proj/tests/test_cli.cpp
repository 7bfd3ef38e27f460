#include "doctest.h"

#include "mod2cohom/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mod2cohom;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("mod2cohom_test_" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    const auto path = temp_path("doc.json");
    args.push_back("--json");
    args.push_back(path.string());
    const Result r = run(args);
    REQUIRE(r.code == expected_code);
    const json doc = json::parse(slurp(path));
    std::filesystem::remove(path);
    return doc;
}

}  // namespace

TEST_CASE("dims Z/2 gives a table of ones")
{
    const json doc = run_json({"dims", "Z/2", "--max-degree", "4"});
    CHECK(doc["schema"] == "mod2cohom/1");
    CHECK(doc["verdict"] == "PASS");
    REQUIRE(doc["dims"].size() == 5);
    for (const auto& row : doc["dims"]) {
        CHECK(row["ring"] == 1);
        CHECK(row["predicted"] == 1);
        CHECK(row["hilbert"] == 1);
        CHECK(row["cokernel"] == 1);
    }
}

TEST_CASE("witness Z/2 Z/4")
{
    const Result r = run({"witness", "Z/2", "Z/4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dims equal; squaring rank 1 vs 0; rings NOT isomorphic") != std::string::npos);
}

TEST_CASE("verify Z/2 x Z/4")
{
    const Result r = run({"verify", "Z/2 x Z/4", "--bar-max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("every subcommand runs and writes a versioned document")
{
    const std::vector<std::vector<std::string>> cmds = {
        {"ring", "Z x Z/2 x Z/4"},
        {"dims", "Z/2 x Z/4", "--bar-max-degree", "2"},
        {"filtration", "Z/2 x Z/4", "-n", "4"},
        {"steenrod", "Z/2 x Z/4 x Z", "--max-degree", "5"},
        {"homology", "Z/8 x Z/2", "--max-degree", "6"},
        {"verify", "Z/6", "--bar-max-degree", "2"},
        {"verify", "Z x Z/2"},
        {"witness", "Z/2 x Z/4", "Z/4 x Z/2"},
    };
    for (const auto& c : cmds) {
        CAPTURE(c[0]);
        const json doc = run_json(c);
        CHECK(doc["schema"] == "mod2cohom/1");
        CHECK(doc["command"] == c[0]);
    }
}

TEST_CASE("JSON output round-trips byte for byte and is deterministic")
{
    const auto path = temp_path("rt.json");
    const std::vector<std::string> args = {"homology", "Z^2 x Z/2 x Z/4", "--json", path.string()};
    REQUIRE(run(args).code == 0);
    const std::string first = slurp(path);
    CHECK(cli::render_json(json::parse(first)) == first);

    const Result again = run(args);
    REQUIRE(again.code == 0);
    CHECK(slurp(path) == first);
    CHECK(run({"homology", "Z^2 x Z/2 x Z/4"}).out == run({"homology", "Z^2 x Z/2 x Z/4"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("canonical form is echoed")
{
    const Result r = run({"ring", "Z/4 * Z/2 x Z/3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z/2 x Z/12") != std::string::npos);
}

TEST_CASE("malformed spec exits 2 with token and position")
{
    const Result r = run({"ring", "Z/2 x Q"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 6") != std::string::npos);
    CHECK(r.err.find("'Q'") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"dims"}).code == 2);
    CHECK(run({"dims", "Z/2", "--max-degree", "x"}).code == 2);
    CHECK(run({"filtration", "Z/2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resource budget exits 3")
{
    const Result r = run({"verify", "Z/2 x Z/2 x Z/4", "--bar-max-degree", "5", "--memory-budget-mib", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("|G|^") != std::string::npos);
}

TEST_CASE("relation matrix files")
{
    const auto path = temp_path("rel.txt");
    {
        std::ofstream f(path);
        f << "2 3\n2 0 0\n0 4 0\n";
    }
    const Result r = run({"ring", "@" + path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z x Z/2 x Z/4") != std::string::npos);
    {
        std::ofstream f(path);
        f << "2 3\n2 0\n";
    }
    CHECK(run({"ring", "@" + path.string()}).code == 2);
    std::filesystem::remove(path);
    CHECK(run({"ring", "@" + path.string()}).code == 2);
}
