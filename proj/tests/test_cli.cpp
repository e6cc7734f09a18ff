#include "cli.hpp"

#include "deficiency/constructions.hpp"
#include "deficiency/graph_io.hpp"
#include "deficiency/harness.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = deficiency::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bound kr")
{
    const auto r = run({"bound", "kr", "--n", "9", "--t", "0", "--r", "3"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("value") == 30);
    CHECK(j.at("side") == "EX1");
}

TEST_CASE("construct ex2 emits graph6 with the expected edge count")
{
    const auto r = run({"construct", "ex2", "--n", "8", "--t", "4", "--r", "3"});
    REQUIRE(r.code == 0);
    const auto g = deficiency::parse_graph6(r.out.substr(0, r.out.find('\n')));
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 13);
}

TEST_CASE("verify kr report")
{
    const auto r = run({"verify", "kr", "--nmax", "5", "--r", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out).get<deficiency::VerificationReport>();
    CHECK(report.verdict() == "pass");
    CHECK(report.graphs_checked > 0);
}

TEST_CASE("thread count does not change report content")
{
    auto strip = [](const std::string& s) {
        json j = json::parse(s);
        j.erase("elapsed_seconds");
        return j;
    };
    const auto a = run({"--threads", "1", "verify", "hamilton", "--nmax", "5"});
    const auto b = run({"--threads", "3", "verify", "hamilton", "--nmax", "5"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("factor and deficiency")
{
    const auto f = run({"factor", "--g6", "D?{", "--t", "1", "--r", "3", "--json"});
    REQUIRE(f.code == 0);
    CHECK(json::parse(f.out).at("found") == false);

    const auto h = run({"factor", "--g6", "D?{", "--t", "4", "--hamilton", "--json"});
    REQUIRE(h.code == 0);
    CHECK(json::parse(h.out).at("found") == true);

    const auto d = run({"deficiency", "--g6", "B?", "--property", "kr", "--r", "3"});
    REQUIRE(d.code == 0);
    CHECK(d.out == "6\n");

    const auto dh = run({"deficiency", "--g6", "C?", "--property", "ham"});
    CHECK(dh.out == "4\n");
}

TEST_CASE("repair subcommands")
{
    const auto v = run({"repair", "vertex", "--g6", "B?", "--t", "6", "--r", "3", "--v", "0"});
    REQUIRE(v.code == 0);
    const json jv = json::parse(v.out);
    CHECK(jv.at("factor_found") == true);
    CHECK(jv.at("valid") == true);

    const auto e = run({"repair", "edge", "--g6", deficiency::emit_graph6(deficiency::path(6)), "--t", "3", "--r", "3", "--x", "0", "--y", "1"});
    REQUIRE(e.code == 0);
    const json je = json::parse(e.out);
    if (je.at("factor_found") == true) CHECK(je.at("valid") == true);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"--bogus"}).code == 2);
    CHECK(run({"factor", "--g6", "D?", "--r", "3"}).code == 2);                       // truncated graph6
    CHECK(run({"construct", "ex1", "--n", "9", "--t", "1", "--r", "3"}).code == 2);    // 3 does not divide 10
    CHECK(run({"repair", "edge", "--g6", "Bw", "--t", "0", "--r", "3", "--x", "0", "--y", "1"}).code == 3);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "kr", "--nmax", "9", "--r", "3"}).code == 2);                  // beyond sweep limit
}

}
