#include "deficiency/certificate.hpp"
#include "deficiency/constructions.hpp"
#include "deficiency/enumerate.hpp"
#include "deficiency/errors.hpp"
#include "deficiency/factor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deficiency;

TEST_SUITE("factor") {

TEST_CASE("K_r-factor examples")
{
    const auto k6 = kr_factor(Graph::complete(6), 3);
    REQUIRE(k6);
    CHECK(k6->tiles.size() == 2);
    CHECK(validate_kr_factor(Graph::complete(6), 3, *k6));

    CHECK_FALSE(kr_factor(ex1_factor(RFactorParams::make(9, 0, 3)), 3));

    const Graph k33 = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(isomorphic(k33, complete_bipartite(3, 3)));
    CHECK_FALSE(kr_factor(k33, 3));

    const Graph j = join(ex1_factor(RFactorParams::make(9, 3, 3)), 3);
    CHECK_FALSE(kr_factor(j, 3));
}

TEST_CASE("certificates are deterministic and cover the lowest vertex first")
{
    const auto a = kr_factor(Graph::complete(6), 3);
    const auto b = kr_factor(Graph::complete(6), 3);
    REQUIRE(a);
    CHECK(*a == *b);
    CHECK(a->tiles.front().front() == 0);
}

TEST_CASE("H-factor examples")
{
    const Graph edge = Graph::complete(2);
    const auto m = h_factor(cycle(4), edge);
    REQUIRE(m);
    CHECK(m->tiles.size() == 2);
    CHECK(validate_h_factor(cycle(4), edge, *m));

    CHECK(h_factor(complete_bipartite(2, 2), star(1)));

    const Graph p3 = star(2);
    const auto f = h_factor(path(6), p3);
    REQUIRE(f);
    CHECK(validate_h_factor(path(6), p3, *f));
    CHECK_FALSE(h_factor(star(5), p3));
}

TEST_CASE("H-factor with K_r pattern agrees with K_r-factor")
{
    for (int n : {3, 6}) {
        for (const Graph& g : iso_representatives(n)) {
            CHECK(h_factor(g, Graph::complete(3)).has_value() == kr_factor(g, 3).has_value());
        }
    }
}

TEST_CASE("Hamilton cycle examples")
{
    const auto c7 = hamilton_cycle(cycle(7));
    REQUIRE(c7);
    CHECK(validate_hamilton_cycle(cycle(7), *c7));
    CHECK(c7->tiles.front().size() == 7);

    CHECK_FALSE(hamilton_cycle(star(3)));
    CHECK_FALSE(hamilton_cycle(join(Graph(4), 3)));
    CHECK(hamilton_cycle(join(Graph(4), 4)));
    CHECK_THROWS_AS(hamilton_cycle(Graph::complete(2)), InputError);
}

TEST_CASE("solvers agree with naive oracles on every labelled graph up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        LabelledGraphs(n).for_each([&](std::uint64_t, const Graph& g) {
            for (int r : {2, 3}) {
                const auto cert = kr_factor(g, r);
                if (cert.has_value() != oracle::has_kr_factor(g, r)) FAIL("K_r mismatch " << n << " r=" << r);
                if (cert && !validate_kr_factor(g, r, *cert)) FAIL("invalid K_r certificate");
            }
            if (n >= 3) {
                const auto ham = hamilton_cycle(g);
                if (ham.has_value() != oracle::is_hamiltonian(g)) FAIL("Hamilton mismatch");
                if (ham && !validate_hamilton_cycle(g, *ham)) FAIL("invalid Hamilton certificate");
            }
        });
    }
}

TEST_CASE("adding an edge never destroys a factor")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        const std::uint64_t idx = rng() & ((std::uint64_t{1} << pair_count(n)) - 1);
        const Graph g = graph_from_index(n, idx);
        const int k = static_cast<int>(rng() % pair_count(n));
        const auto [u, v] = pair_at(k);
        const Graph h = GraphBuilder(g).add_edge(u, v).finish();
        for (int r : {2, 3, 4})
            if (kr_factor(g, r)) CHECK(kr_factor(h, r));
        if (hamilton_cycle(g)) CHECK(hamilton_cycle(h));
        if (h_factor(g, star(2))) CHECK(h_factor(h, star(2)));
    }
}

TEST_CASE("validators reject bad certificates")
{
    const Graph k6 = Graph::complete(6);
    FactorCertificate overlap{TileKind::Clique, {{0, 1, 2}, {2, 3, 4}}};
    CHECK_FALSE(validate_kr_factor(k6, 3, overlap));
    FactorCertificate missing{TileKind::Clique, {{0, 1, 2}}};
    CHECK_FALSE(validate_kr_factor(k6, 3, missing));
    FactorCertificate not_clique{TileKind::Clique, {{0, 1, 2}, {3, 4, 5}}};
    CHECK_FALSE(validate_kr_factor(cycle(6), 3, not_clique));
    FactorCertificate wrong_size{TileKind::Clique, {{0, 1}, {2, 3}, {4, 5}}};
    CHECK_FALSE(validate_kr_factor(k6, 3, wrong_size));
    FactorCertificate bad_cycle{TileKind::HamiltonCycle, {{0, 2, 1, 3}}};
    CHECK_FALSE(validate_hamilton_cycle(cycle(4), bad_cycle));
    FactorCertificate bad_pattern{TileKind::Pattern, {{0, 2, 1}, {3, 4, 5}}};
    CHECK_FALSE(validate_h_factor(path(6), star(2), bad_pattern));
}

TEST_CASE("certificate JSON round trip")
{
    const auto cert = kr_factor(Graph::complete(9), 3);
    REQUIRE(cert);
    const nlohmann::json j = *cert;
    CHECK(j.at("kind") == "K_r");
    CHECK(j.get<FactorCertificate>() == *cert);
}

TEST_CASE("embedding")
{
    const auto e = find_embedding(cycle(4), Graph::complete(4));
    REQUIRE(e);
    CHECK(e->size() == 4);
    CHECK_FALSE(find_embedding(Graph::complete(3), complete_bipartite(3, 3)));
}

TEST_CASE("Hajnal-Szemeredi guarantee")
{
    CHECK(hajnal_szemeredi_guarantee(Graph::complete(6), 3));
    CHECK_FALSE(hajnal_szemeredi_guarantee(cycle(6), 3));
    CHECK_FALSE(hajnal_szemeredi_guarantee(join(ex2_factor(RFactorParams::make(9, 0, 3)), 0), 3));
    CHECK_FALSE(hajnal_szemeredi_guarantee(Graph::complete(7), 3));
}

TEST_CASE("degree sequence condition")
{
    for (int n : {2, 4, 6, 8, 10})
        for (Rational gamma : {Rational(1, 10), Rational(1, 4), Rational(1, 2) - Rational(1, 100)})
            CHECK(degree_sequence_condition(Graph::complete(n), gamma));
    // for odd n the top index i=(n-1)/2 needs n-1 >= (n-1)/2 + gamma n, which
    // fails once gamma > (n-1)/(2n)
    CHECK(degree_sequence_condition(Graph::complete(9), Rational(4, 9)));
    CHECK_FALSE(degree_sequence_condition(Graph::complete(9), Rational(1, 2) - Rational(1, 100)));

    CHECK_FALSE(degree_sequence_condition(Graph(10), Rational(1, 10)));

    const int n = 10, t = 2;
    const Graph j = join(ex2_band(n, t), t);
    CHECK(degree_sequence(j).sorted[t - 1] == t);
    CHECK_FALSE(degree_sequence_condition(j, Rational(1, 20)));

    CHECK_THROWS_AS(degree_sequence_condition(Graph(3), Rational(0)), ParameterError);
}

}
