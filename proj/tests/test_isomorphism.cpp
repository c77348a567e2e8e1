#include "doctest.h"

#include "dsrpm/family.hpp"
#include "dsrpm/isomorphism.hpp"
#include "dsrpm/random_graphs.hpp"
#include "oracles.hpp"

using namespace dsrpm;

TEST_CASE("relabelled copies are isomorphic") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const Graph g = erdos_renyi(uniform_int(rng, 1, 20), 0.5, rng);
        REQUIRE(isomorphic(g, oracle::shuffled(g, rng)) == Isomorphism::isomorphic);
    }
}

TEST_CASE("agrees with the permutation oracle on small graphs") {
    Rng rng(11);
    int same = 0;
    for (int t = 0; t < 2000; ++t) {
        const int n = uniform_int(rng, 1, 6);
        const Graph g = erdos_renyi(n, 0.5, rng);
        const Graph h = erdos_renyi(n, 0.5, rng);
        const bool expect = oracle::isomorphic(g, h);
        same += expect;
        REQUIRE((isomorphic(g, h) == Isomorphism::isomorphic) == expect);
    }
    CHECK(same > 50);
}

TEST_CASE("regular graphs defeat plain refinement but not the search") {
    // C6 vs two triangles: both 2-regular
    const Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    const Graph two_k3 = copies(complete_graph(3), 2);
    CHECK(isomorphic(c6, two_k3) == Isomorphism::not_isomorphic);
    // K_{3,3} vs the triangular prism: both 3-regular on 6 vertices
    const Graph k33 = join(Graph(3), Graph(3));
    const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(isomorphic(k33, prism) == Isomorphism::not_isomorphic);
    Rng rng(5);
    CHECK(isomorphic(prism, oracle::shuffled(prism, rng)) == Isomorphism::isomorphic);
}

TEST_CASE("family members above the exact order") {
    Rng rng(9);
    const Graph g = extremal_family(22, 2);
    CHECK(isomorphic(g, oracle::shuffled(g, rng)) == Isomorphism::isomorphic);
    CHECK(isomorphic(g, proof_family(FamilySpec{22, 2, {1, 1, 5, 13}})) == Isomorphism::not_isomorphic);
    CHECK(isomorphic(g, extremal_family(22, 1)) == Isomorphism::not_isomorphic);
}

TEST_CASE("a starved budget is reported, never guessed") {
    // 4-regular circulant on 20 vertices vs a relabelled copy needs real branching
    Graph c(20);
    for (int v = 0; v < 20; ++v) {
        c.add_edge(v, (v + 1) % 20);
        c.add_edge(v, (v + 3) % 20);
    }
    Rng rng(1);
    const auto verdict = isomorphic(c, oracle::shuffled(c, rng), 1);
    CHECK(verdict != Isomorphism::not_isomorphic);
    CHECK(isomorphic(c, oracle::shuffled(c, rng)) == Isomorphism::isomorphic);
}
