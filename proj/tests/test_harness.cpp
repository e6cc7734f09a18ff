#include "deficiency/constructions.hpp"
#include "deficiency/errors.hpp"
#include "deficiency/harness.hpp"

#include <doctest.h>

using namespace deficiency;
using nlohmann::json;

namespace {

json content(const VerificationReport& r)
{
    json j = r;
    j.erase("elapsed_seconds");
    return j;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("K_r sweep passes and is the same under any thread count")
{
    const auto one = verify_kr_bound(5, 3, {1, false});
    CHECK(one.pass());
    CHECK(one.graphs_checked > 0);
    const auto four = verify_kr_bound(5, 3, {4, false});
    CHECK(content(one) == content(four));
}

TEST_CASE("K_r sweep base case")
{
    const auto r = verify_kr_bound(2, 3);
    CHECK(r.pass());
    CHECK(r.graphs_checked > 0);
}

TEST_CASE("iso-dedup and labelled sweeps agree")
{
    for (int n = 2; n <= 5; ++n) {
        CHECK(verify_kr_bound(n, 3, {2, false}).verdict() == verify_kr_bound(n, 3, {2, true}).verdict());
        CHECK(verify_kr_bound(n, 4, {2, false}).verdict() == verify_kr_bound(n, 4, {2, true}).verdict());
        CHECK(verify_hamilton_bound(n, {2, false}).verdict() == verify_hamilton_bound(n, {2, true}).verdict());
    }
}

TEST_CASE("Hamilton sweep")
{
    const auto a = verify_hamilton_bound(5, {1, false});
    const auto b = verify_hamilton_bound(5, {3, false});
    CHECK(a.pass());
    CHECK(content(a) == content(b));
}

TEST_CASE("H-class checks")
{
    CHECK(verify_h_classes(8, 2, cycle(10)).pass());
    CHECK(verify_h_classes(7, 2, disjoint_union(Graph(1), cycle(8))).pass());
    CHECK(verify_h_classes(9, 3, disjoint_copies(complete_bipartite(2, 2), 3)).pass());
    CHECK_THROWS_AS(verify_h_classes(3, 1, Graph::complete(4)), ParameterError);
    CHECK_THROWS_AS(verify_h_classes(3, 1, cycle(5)), InputError);
    CHECK_THROWS_AS(verify_h_classes(12, 2, cycle(14)), SizeError);
}

TEST_CASE("arithmetic sweep")
{
    const auto r = verify_step_inequality(60, 8);
    CHECK(r.pass());
    CHECK(r.graphs_checked > 0);
}

TEST_CASE("repair sweep is reproducible")
{
    RepairSweepOptions o;
    o.samples = 300;
    o.seed = 42;
    const auto a = verify_repair(o);
    const auto b = verify_repair(o);
    CHECK(a.pass());
    CHECK(content(a) == content(b));
    CHECK(a.graphs_checked == 600);
}

TEST_CASE("repair sweep with larger cliques reaches bigger Q")
{
    for (int r : {4, 5}) {
        RepairSweepOptions o;
        o.samples = 400;
        o.r = r;
        o.n_max = 9;
        o.t_max = 2 * (r - 1);
        const auto rep = verify_repair(o);
        CHECK(rep.pass());
        CHECK(rep.stats.value("edge_ell_" + std::to_string(r - 1), 0) > 0);
    }
}

TEST_CASE("size limits are enforced")
{
    CHECK_THROWS_AS(verify_kr_bound(kLabelledSweepMaxOrder + 1, 3), SizeError);
    CHECK_THROWS_AS(verify_kr_bound(kIsoSweepMaxOrder + 1, 3, {1, true}), SizeError);
    CHECK_THROWS_AS(verify_kr_bound(5, 2), ParameterError);
}

TEST_CASE("report JSON round trip")
{
    VerificationReport r;
    r.task = "kr";
    r.parameters = {{"n_max", 4}};
    r.graphs_checked = 12;
    r.counterexamples.push_back({"D?{", 5, 1, 3, "bound", "e=4 > 3"});
    r.stats = {{"x", 1}};
    r.elapsed_seconds = 0.5;
    const json j = r;
    CHECK(j.at("verdict") == "fail");
    const auto back = j.get<VerificationReport>();
    CHECK(json(back) == j);

    json bad = j;
    bad["verdict"] = "pass";
    CHECK_THROWS_AS(bad.get<VerificationReport>(), InputError);

    const json live = verify_step_inequality(10, 4);
    for (const char* key : {"task", "parameters", "graphs_checked", "counterexamples", "stats", "elapsed_seconds", "verdict"})
        CHECK(live.contains(key));
    CHECK(json(live.get<VerificationReport>()) == live);
}

}
