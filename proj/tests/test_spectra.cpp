#include "doctest.h"

#include <cmath>

#include "dsrpm/errors.hpp"
#include "dsrpm/family.hpp"
#include "dsrpm/random_graphs.hpp"
#include "dsrpm/spectra.hpp"
#include "oracles.hpp"

using namespace dsrpm;

TEST_CASE("distance matrix matches Floyd-Warshall") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_connected_graph(uniform_int(rng, 1, 20), rng);
        const DistanceMatrix d = distance_matrix(g);
        const auto f = oracle::floyd(g);
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) REQUIRE(d(i, j) == f[i][j]);
    }
}

TEST_CASE("disconnected and empty inputs are rejected") {
    CHECK_THROWS_AS(distance_matrix(Graph(2)), ConnectivityError);
    CHECK_THROWS_AS(distance_matrix(Graph(0)), ConnectivityError);
    CHECK_THROWS_AS(distance_spectral_radius(Graph(3)), ConnectivityError);
    CHECK_THROWS_AS(distance_spectral_radius(complete_graph(3), 1e-14), InvalidParameter);
}

TEST_CASE("Wiener index") {
    CHECK(wiener_index(extremal_family(14, 1)) == 130);
    CHECK(wiener_index(complete_graph(6)) == 15);
    // path P_n: sum of i*(n-i)
    Graph p = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(wiener_index(p) == 4 + 6 + 6 + 4);
    CHECK(mu_lower_bound_wiener(extremal_family(14, 1)) == make_rational(130, 7));
}

TEST_CASE("closed forms: complete, star, cycle") {
    for (int n = 2; n <= 12; ++n) {
        const auto e = distance_spectral_radius(complete_graph(n));
        CHECK(e.lo <= n - 1);
        CHECK(e.hi >= n - 1);
        CHECK(e.value == doctest::Approx(n - 1).epsilon(1e-12));
    }
    // star K_{1,m}: μ = m − 1 + sqrt(m^2 − m + 1)
    for (int m = 2; m <= 15; ++m) {
        const double expect = m - 1 + std::sqrt(double(m) * m - m + 1);
        CHECK(distance_spectral_radius(join(Graph(1), Graph(m))).value == doctest::Approx(expect).epsilon(1e-10));
    }
    // even cycle C_n: transmission n^2/4
    for (int n = 4; n <= 16; n += 2) {
        Graph c(n);
        for (int v = 0; v < n; ++v) c.add_edge(v, (v + 1) % n);
        CHECK(distance_spectral_radius(c).value == doctest::Approx(n * n / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("power iteration agrees with a Jacobi eigensolve") {
    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
        const Graph g = random_connected_graph(uniform_int(rng, 2, 12), rng);
        const auto e = distance_spectral_radius(g);
        const double ref = oracle::distance_mu(g);
        REQUIRE(std::abs(e.value - ref) <= 1e-8 * ref);
        REQUIRE(e.lo <= ref + 1e-9 * ref);
        REQUIRE(e.hi >= ref - 1e-9 * ref);
        REQUIRE(e.width() <= 1e-10 * std::max(1.0L, e.hi));
    }
}

TEST_CASE("bracket sits inside the row-sum and Wiener bounds") {
    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_connected_graph(uniform_int(rng, 2, 30), rng);
        const DistanceMatrix d = distance_matrix(g);
        const auto e = distance_spectral_radius(d);
        REQUIRE(e.lo >= 0);
        REQUIRE(e.hi <= d.max_row_sum());
        REQUIRE(e.lo >= d.min_row_sum() - 1e-9);
        REQUIRE(e.hi >= to_long_double(mu_lower_bound_wiener(d)) - 1e-12);
    }
}

TEST_CASE("single vertex is rejected") {
    CHECK_THROWS_AS(distance_spectral_radius(Graph(1)), InvalidParameter);
    CHECK(distance_matrix(Graph(1)).order() == 1);
}

TEST_CASE("comparison is strict only on disjoint brackets") {
    SpectralEstimate a{}, b{};
    a.lo = 1.0L, a.hi = 2.0L;
    b.lo = 3.0L, b.hi = 4.0L;
    CHECK(compare_estimates(a, b) == MuOrder::less);
    CHECK(compare_estimates(b, a) == MuOrder::greater);
    b.lo = 2.0L;
    CHECK(compare_estimates(a, b) == MuOrder::indeterminate);
    CHECK(compare_mu(complete_graph(5), complete_graph(5)) == MuOrder::indeterminate);
    CHECK(std::string(to_string(MuOrder::greater)) == "Greater");
}

TEST_CASE("removing an edge raises the radius") {
    Graph g = complete_graph(7);
    const Graph full = g;
    g.remove_edge(0, 1);
    CHECK(compare_mu(g, full) == MuOrder::greater);
}

TEST_CASE("radius is a relabelling invariant") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_connected_graph(uniform_int(rng, 3, 25), rng);
        const auto a = distance_spectral_radius(g);
        const auto b = distance_spectral_radius(oracle::shuffled(g, rng));
        REQUIRE(a.value == doctest::Approx(b.value).epsilon(1e-10));
    }
}

TEST_CASE("closing P4 into C4 lowers the radius") {
    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph c4 = p4;
    c4.add_edge(0, 3);
    CHECK(compare_mu(p4, c4) == MuOrder::greater);
    CHECK(distance_spectral_radius(c4).value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("Wiener bound is tight on complete graphs") {
    for (int n = 2; n <= 20; ++n) {
        const auto e = distance_spectral_radius(complete_graph(n));
        const long double bound = to_long_double(mu_lower_bound_wiener(complete_graph(n)));
        CHECK(std::fabs(static_cast<long double>(e.value) - bound) <= 1e-10L);
    }
}
