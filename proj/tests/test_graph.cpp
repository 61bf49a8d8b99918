#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "neighborly/graph.hpp"

using namespace neighborly;

namespace {

// independent oracle: dominating-set check by definition
bool dominates(const Graph& g, Subset s) {
    for (int v = 1; v <= g.n; ++v)
        if ((closed_neighborhood(g, v) & s) == 0) return false;
    return true;
}

// exhaustive enumeration over all 2^n subsets
std::vector<Subset> brute_force_minimal_dominating(const Graph& g) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << g.n); ++s) {
        if (!dominates(g, s)) continue;
        bool minimal = true;
        for (int v : to_vertices(s))
            if (dominates(g, s & ~single(v))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    canonical_sort(out);
    return out;
}

}  // namespace

TEST_CASE("path graphs") {
    CHECK(path_graph(1).edge_count() == 0);
    Graph p4 = path_graph(4);
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    Graph p7 = path_graph(7);
    CHECK(p7.edge_count() == 6);
    for (int i = 1; i <= 6; ++i) CHECK(p7.has_edge(i, i + 1));
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("graph squares") {
    Graph k3 = graph_square(path_graph(3));
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(1, 3));

    Graph p4sq = graph_square(path_graph(4));
    CHECK(p4sq.edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});

    Graph p7sq = graph_square(path_graph(7));
    CHECK(p7sq.edge_count() == 11);
    for (int i = 1; i <= 5; ++i) CHECK(p7sq.has_edge(i, i + 2));

    for (int n = 3; n <= 20; ++n)
        CHECK(graph_square(path_graph(n)).edge_count() ==
              static_cast<std::size_t>((n - 1) + (n - 2)));
}

TEST_CASE("closed neighborhoods") {
    Graph p7sq = graph_square(path_graph(7));
    CHECK(closed_neighborhood(p7sq, 1) == from_vertices({1, 2, 3}));
    CHECK(closed_neighborhood(p7sq, 4) == from_vertices({2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(closed_neighborhood(p7sq, 8), std::invalid_argument);

    Graph isolated(3);
    CHECK(closed_neighborhood(isolated, 2) == single(2));

    for (int v = 1; v <= 7; ++v) CHECK(contains(closed_neighborhood(p7sq, v), v));
}

TEST_CASE("minimal dominating sets of P_7^2") {
    Graph p7sq = graph_square(path_graph(7));
    DominationSummary summary = minimal_dominating_sets(p7sq);
    CHECK(summary.gamma == 2);
    Subset s147 = from_vertices({1, 4, 7});
    CHECK(std::find(summary.minimal_sets.begin(), summary.minimal_sets.end(), s147) !=
          summary.minimal_sets.end());
    CHECK(summary.gamma_prime >= 3);
    CHECK(summary.minimal_sets == brute_force_minimal_dominating(p7sq));
}

TEST_CASE("complete graph domination") {
    Graph k3 = graph_square(path_graph(3));
    DominationSummary summary = minimal_dominating_sets(k3);
    CHECK(summary.minimal_sets == std::vector<Subset>{single(1), single(2), single(3)});
    CHECK(summary.gamma == 1);
    CHECK(summary.gamma_prime == 1);
}

TEST_CASE("enumeration agrees with brute force on squares of small paths") {
    for (int n = 1; n <= 10; ++n) {
        Graph g = n >= 2 ? graph_square(path_graph(n)) : path_graph(n);
        DominationSummary summary = minimal_dominating_sets(g);
        CHECK(summary.minimal_sets == brute_force_minimal_dominating(g));
        for (Subset s : summary.minimal_sets) {
            CHECK(dominates(g, s));
            for (int v : to_vertices(s)) CHECK(!dominates(g, s & ~single(v)));
        }
    }
}

TEST_CASE("enumeration cap is a reported failure") {
    Graph g = graph_square(path_graph(12));
    CHECK_THROWS_AS(minimal_dominating_sets(g, 2), CapExceeded);
}
