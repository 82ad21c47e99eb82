#include <catch2/catch_amalgamated.hpp>

#include <srglab/constructions.hpp>
#include <srglab/invariants.hpp>
#include <srglab/theta.hpp>
#include <srglab/theta_sdp.hpp>

#include <cmath>
#include <random>

using namespace srglab;

TEST_CASE("interior point solver reproduces known theta values") {
    struct Case {
        Graph g;
        double want;
    };
    const Case cases[] = {
        {petersen(), 4.0},
        {shrikhande(), 4.0},
        {cycle(5), std::sqrt(5.0)},
        {cycle(7), 3.317667207394096},
        {complete_graph(6), 1.0},
        {complement(complete_graph(6)), 6.0},
        {path(4), 2.0}, // alpha = chi of the (self-complementary) complement = 2
    };
    for (const auto& c : cases) {
        auto r = theta_sdp(c.g, 1e-8);
        CHECK(r.value == Catch::Approx(c.want).margin(1e-6));
        CHECK(r.duality_gap <= 1e-8 + 1e-12);
        CHECK(r.primal_residual < 1e-7);
        CHECK(r.iterations <= kSdpIterationBudget);
    }
}

TEST_CASE("solver agrees with the cycle formula") {
    for (int len = 4; len <= 12; ++len) {
        auto r = theta_sdp(cycle(len), 1e-8);
        CHECK(r.value == Catch::Approx(theta_cycle(len)).margin(1e-4));
    }
}

TEST_CASE("looser tolerance still brackets the answer") {
    auto r = theta_sdp(petersen(), 1e-4);
    CHECK(r.value == Catch::Approx(4.0).margin(1e-4));
    CHECK(r.duality_gap <= 1e-4 + 1e-12);
}

TEST_CASE("input validation") {
    setenv("SRGLAB_VERTEX_CAP", "200", 1);
    CHECK_THROWS_AS(theta_sdp(complete_graph(65), 1e-8), TooLarge);
    unsetenv("SRGLAB_VERTEX_CAP");
    CHECK_THROWS_AS(theta_sdp(petersen(), 1e-11), InvalidParams);
    CHECK_THROWS_AS(theta_sdp(petersen(), 0.5), InvalidParams);
    CHECK_THROWS_AS(theta_sdp(petersen(), 1e-8, 0), InvalidParams);
}

TEST_CASE("sandwich on random small graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) b.add_edge(u, v);
        auto g = b.build();
        auto r = theta_sdp(g, 1e-8);
        int alpha = independence_number(g);
        int chi_bar = chromatic_number(complement(g));
        CAPTURE(n, g.edge_count());
        CHECK(static_cast<double>(alpha) <= r.value + 1e-6);
        CHECK(r.value <= static_cast<double>(chi_bar) + 1e-6);
    }
}

TEST_CASE("theta is monotone under edge deletion") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) b.add_edge(u, v);
        auto g = b.build();
        if (g.edge_count() == 0) continue;
        auto es = g.edges();
        auto [u, v] = es[rng() % es.size()];
        auto bigger = theta_sdp(remove_edge(g, u, v), 1e-8).value;
        auto smaller = theta_sdp(g, 1e-8).value;
        CHECK(bigger >= smaller - 1e-4);
    }
}
