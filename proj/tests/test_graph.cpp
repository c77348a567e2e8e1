#include "doctest.h"

#include "dsrpm/errors.hpp"
#include "dsrpm/family.hpp"
#include "dsrpm/graph.hpp"

using namespace dsrpm;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::range(2, 3);
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    s.erase(3);
    s.insert(10);
    CHECK(s.members() == std::vector<int>{2, 4, 10});
    CHECK(VertexSet::range(0, 64).size() == 64);
    CHECK(VertexSet::range(0, 0).empty());
}

TEST_CASE("graph mutators keep rows symmetric") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    CHECK(g.has_edge(3, 0));
    CHECK(g.degree(3) == 2);
    CHECK(g.edge_count() == 2);
    g.add_edge(0, 3);
    CHECK(g.edge_count() == 2);
    g.remove_edge(3, 0);
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{3, 4}});
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(1, 5), InvalidParameter);
    CHECK_THROWS_AS(Graph(65), CapacityError);
    CHECK_NOTHROW(Graph(64));
}

TEST_CASE("vertex deletion relabels densely") {
    const Graph p = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph h = p.without(VertexSet::range(1, 1));
    CHECK(h.order() == 3);
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("joins and unions") {
    const Graph k3 = complete_graph(3);
    CHECK(k3.edge_count() == 3);
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(copies(k3, 3).edge_count() == 9);
    const Graph u = disjoint_union(k3, complete_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(2, 3));
    const Graph j = join(empty_graph(2), empty_graph(3));
    CHECK(j.edge_count() == 6);
    CHECK(join(k3, complete_graph(4)) == complete_graph(7));
}

TEST_CASE("extremal family at (14, 1) has 52 edges") {
    // C(1,2) + 1*13 + C(3,2) + C(9,2) = 0 + 13 + 3 + 36
    const Graph g = extremal_family(14, 1);
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 52);
    CHECK(g.degree(0) == 13);
    CHECK(g.degree(1) == 1);
    const auto blocks = cut_family_partition(14, 1);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[2].members() == std::vector<int>{2, 3, 4});
    CHECK(blocks[3].size() == 9);
}

TEST_CASE("edge count of the cut family matches the counting formula") {
    for (int s = 1; s <= 5; ++s)
        for (int n = 2 * s + 6; n <= 40; n += 2) {
            const int big = n - 2 * s - 3;
            const int expect = s * (s - 1) / 2 + s * (n - s) + 3 + big * (big - 1) / 2;
            CHECK(cut_family(n, s).edge_count() == expect);
        }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(extremal_family(15, 1), InvalidParameter);
    CHECK_THROWS_AS(extremal_family(12, 4), InvalidParameter);
    CHECK_THROWS_AS(extremal_family(14, 0), InvalidParameter);
    FamilySpec bad{10, 1, {1, 2, 6}};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    FamilySpec sum{10, 1, {1, 3, 3}};
    CHECK_THROWS_AS(sum.validate(), InvalidParameter);
    FamilySpec order{14, 1, {3, 1, 9}};
    CHECK_THROWS_AS(order.validate(), InvalidParameter);
}

TEST_CASE("proof family equals the cut family on the baseline shape") {
    const FamilySpec spec{14, 1, {1, 3, 9}};
    CHECK(proof_family(spec) == cut_family(14, 1));
    const FamilySpec base = ordering_baseline(22, 2, 6);
    base.validate();
    CHECK(base.parts == std::vector<int>{1, 1, 3, 3, 3, 9});
}

TEST_CASE("ordering hypotheses") {
    CHECK(FamilySpec{20, 2, {1, 1, 5, 11}}.valid_for_ordering());
    CHECK(FamilySpec{20, 2, {1, 1, 7, 9}}.valid_for_ordering());
    CHECK_FALSE(FamilySpec{20, 2, {1, 1, 3, 13}}.valid_for_ordering());  // the baseline itself
    CHECK_FALSE(FamilySpec{20, 2, {1, 1, 1, 15}}.valid_for_ordering());
    CHECK_FALSE(FamilySpec{20, 2, {1, 17}}.valid_for_ordering());
    CHECK_FALSE(FamilySpec{14, 1, {1, 3, 9}}.valid_for_ordering());
}

TEST_CASE("comparison graphs for the small and large order statements") {
    const Graph small = small_order_extremal(8);
    CHECK(small.order() == 8);
    CHECK(small.edge_count() == 3 + 3 * 5);
    const Graph large = large_order_extremal(10);
    CHECK(large.order() == 10);
    CHECK(large.edge_count() == 21 + 9);
}
