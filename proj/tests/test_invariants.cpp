#include <catch2/catch_amalgamated.hpp>

#include <srglab/constructions.hpp>
#include <srglab/invariants.hpp>

#include <cmath>

using namespace srglab;

TEST_CASE("exact invariants of the worked examples") {
    auto p = petersen();
    CHECK(independence_number(p) == 4);
    CHECK(clique_number(p) == 2);
    CHECK(chromatic_number(p) == 3);

    auto s = shrikhande();
    CHECK(independence_number(s) == 4);
    CHECK(clique_number(s) == 3);
    CHECK(chromatic_number(s) == 4);
    CHECK(chromatic_number(complement(s)) == 6);

    auto r = rook_4x4();
    CHECK(independence_number(r) == 4);
    CHECK(clique_number(r) == 4);
    CHECK(chromatic_number(r) == 4);
    CHECK(chromatic_number(complement(r)) == 4);

    auto t6 = triangular(6);
    CHECK(independence_number(t6) == 3);
    CHECK(clique_number(t6) == 5);
    CHECK(chromatic_number(t6) == 5);
    CHECK(chromatic_number(complement(t6)) == 4);
}

TEST_CASE("edge cases for the exact solvers") {
    auto empty5 = complement(complete_graph(5));
    CHECK(clique_number(empty5) == 1);
    CHECK(chromatic_number(empty5) == 1);
    CHECK(independence_number(empty5) == 5);
    CHECK(clique_number(complete_graph(7)) == 7);
    CHECK(chromatic_number(complete_graph(7)) == 7);
    CHECK(chromatic_number(cycle(7)) == 3);
    CHECK(chromatic_number(cycle(8)) == 2);

    auto k33 = from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                              {2, 3}, {2, 4}, {2, 5}});
    CHECK(clique_number(k33) == 2);
    CHECK(chromatic_number(k33) == 2);
    CHECK(independence_number(k33) == 3);
}

TEST_CASE("solver caps") {
    setenv("SRGLAB_VERTEX_CAP", "100", 1);
    CHECK_THROWS_AS(clique_number(complete_graph(65)), TooLarge);
    CHECK_THROWS_AS(chromatic_number(complete_graph(33)), TooLarge);
    unsetenv("SRGLAB_VERTEX_CAP");
}

TEST_CASE("theta-derived bounds for srg parameters") {
    auto b = srg_invariant_bounds({16, 6, 2, 2});
    CHECK(b.alpha_ub == 4);
    CHECK(b.omega_ub == 4); // not tight: the Cayley graph only reaches 3
    CHECK(b.chi_lb == 4);
    CHECK(b.chi_complement_lb == 4);

    auto t = srg_invariant_bounds({15, 8, 4, 4});
    CHECK(t.alpha_ub == 3);
    CHECK(t.omega_ub == 5);
    CHECK(t.chi_lb == 5);
    CHECK(t.chi_complement_lb == 3); // not tight: actual complement chromatic number is 4

    auto pb = srg_invariant_bounds({10, 3, 0, 1});
    CHECK(pb.alpha_ub == 4);
    CHECK(pb.omega_ub == 2);
    CHECK(pb.chi_lb == 3);
    CHECK(pb.chi_complement_lb == 4);
}

TEST_CASE("bounds sandwich the exact values on constructible families") {
    struct Case {
        Graph g;
        SrgParams p;
    };
    const Case cases[] = {
        {petersen(), {10, 3, 0, 1}},
        {shrikhande(), {16, 6, 2, 2}},
        {rook_4x4(), {16, 6, 2, 2}},
        {triangular(6), {15, 8, 4, 4}},
    };
    for (const auto& c : cases) {
        auto b = srg_invariant_bounds(c.p);
        CHECK(independence_number(c.g) <= b.alpha_ub);
        CHECK(clique_number(c.g) <= b.omega_ub);
        CHECK(chromatic_number(c.g) >= b.chi_lb);
        CHECK(chromatic_number(complement(c.g)) >= b.chi_complement_lb);
    }
}

TEST_CASE("common-neighbor extension bounds") {
    // d = 5, ell = 1 forces n = 21
    auto e = ell_friendship_bounds(21, 5, 1);
    CHECK(e.theta_complement == Catch::Approx(3.5).margin(1e-12));
    CHECK(e.theta == Catch::Approx(6.0).margin(1e-12));
    CHECK(e.bounds.alpha_ub == 6);
    CHECK(e.bounds.chi_lb == 4);
    CHECK_THROWS_AS(ell_friendship_bounds(20, 5, 1), ParamRelationViolated);
    CHECK_THROWS_AS(ell_friendship_bounds(7, 3, 3), DomainTooSmall);
}
