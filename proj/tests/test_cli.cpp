// Integration tests driving the command-line binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path()
{
    const char *p = std::getenv("STARKRANKIN_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string scenario_dir()
{
    const char *p = std::getenv("SCENARIO_DIR");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string &args)
{
    std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("full pipeline passes on the principal scenario")
{
    std::string out = "/tmp/starkrankin_cli_main.json";
    CHECK(run("all --scenario " + scenario_dir() + "/main11_p3.json --out " + out) == 0);
    auto rep = nlohmann::json::parse(slurp(out));
    CHECK(rep.at("all_pass") == true);
    CHECK(rep.at("seed") == 1);
    CHECK(rep.at("checks").is_array());
    CHECK(rep.at("checks").size() > 0);
}

TEST_CASE("point recovery scenarios succeed")
{
    for (std::string name : {"recover43_p11", "recover43_p13", "recover11_p3_torsion"}) {
        std::string out = "/tmp/starkrankin_cli_" + name + ".json";
        CHECK(run("recover --scenario " + scenario_dir() + "/" + name + ".json --out " + out) == 0);
        auto rep = nlohmann::json::parse(slurp(out));
        CHECK(rep.at("all_pass") == true);
    }
}

TEST_CASE("reports are byte-deterministic across runs")
{
    std::string base = "lambda --scenario " + scenario_dir() + "/main11_p3.json --out ";
    CHECK(run(base + "/tmp/starkrankin_cli_det1.json") == 0);
    CHECK(run(base + "/tmp/starkrankin_cli_det2.json") == 0);
    CHECK(slurp("/tmp/starkrankin_cli_det1.json") == slurp("/tmp/starkrankin_cli_det2.json"));
}

TEST_CASE("bad input yields the validation exit code")
{
    CHECK(run("all --scenario /tmp/starkrankin_no_such_scenario.json") == 4);
}
