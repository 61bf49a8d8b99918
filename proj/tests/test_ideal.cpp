#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "neighborly/graph.hpp"
#include "neighborly/ideal.hpp"
#include "neighborly/simplicial.hpp"

using namespace neighborly;

namespace {

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Subset> out;
    for (const auto& l : lists) out.push_back(from_vertices(std::vector<int>(l)));
    canonical_sort(out);
    return out;
}

}  // namespace

TEST_CASE("neighborhood ideal generators") {
    CHECK(neighborhood_ideal(graph_square(path_graph(7))).gens ==
          sets({{1, 2, 3}, {2, 3, 4, 5, 6}, {5, 6, 7}}));
    CHECK(neighborhood_ideal(graph_square(path_graph(4))).gens ==
          sets({{1, 2, 3}, {2, 3, 4}}));
    CHECK(neighborhood_ideal(path_graph(1)).gens == sets({{1}}));
}

TEST_CASE("ni_pn2 matches the generator pattern") {
    CHECK(ni_pn2(6).gens == sets({{1, 2, 3}, {4, 5, 6}}));
    CHECK(ni_pn2(10).gens == sets({{1, 2, 3},
                                   {2, 3, 4, 5, 6},
                                   {3, 4, 5, 6, 7},
                                   {4, 5, 6, 7, 8},
                                   {5, 6, 7, 8, 9},
                                   {8, 9, 10}}));
    CHECK_THROWS_AS(ni_pn2(2), std::invalid_argument);
    for (int n = 7; n <= 20; ++n) {
        std::vector<Subset> expected{range_set(1, 3), range_set(n - 2, n)};
        for (int i = 2; i <= n - 5; ++i) expected.push_back(range_set(i, i + 4));
        canonical_sort(expected);
        CHECK(ni_pn2(n).gens == expected);
    }
}

TEST_CASE("path ideals") {
    CHECK(path_ideal(3, 2).gens == sets({{1, 2}, {2, 3}}));
    CHECK(path_ideal(5, 5).gens == sets({{1, 2, 3, 4, 5}}));
    CHECK(path_ideal_window(7, 2, 6, 5).gens == sets({{2, 3, 4, 5, 6}}));
    CHECK_THROWS_AS(path_ideal(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(path_ideal(4, 1), std::invalid_argument);
}

TEST_CASE("colon by a monomial") {
    // (I_5(P_{2..6}) + (x_1 x_2 x_3)) : (x_5 x_6 x_7) in 7 variables
    SquarefreeIdeal I = add(path_ideal_window(7, 2, 6, 5),
                            SquarefreeIdeal::make(7, {range_set(1, 3)}));
    SquarefreeIdeal colon = colon_by_monomial(I, range_set(5, 7));
    CHECK(colon.gens == sets({{1, 2, 3}, {2, 3, 4}}));

    // I_5(P_{2..9}) : (x_1 x_2 x_3) = I_5(P_{5..9}) + (x_4 x_5 x_6) at n = 10
    SquarefreeIdeal J = colon_by_monomial(path_ideal_window(10, 2, 9, 5), range_set(1, 3));
    CHECK(J == add(path_ideal_window(10, 5, 9, 5),
                   SquarefreeIdeal::make(10, {range_set(4, 6)})));

    // disjoint singleton leaves the ideal unchanged
    SquarefreeIdeal K = SquarefreeIdeal::make(5, sets({{1, 2}, {2, 3}}));
    CHECK(colon_by_monomial(K, single(5)) == K);

    // generator swallowed by the monomial: unit ideal
    CHECK(colon_by_monomial(K, from_vertices({1, 2})).is_unit());
}

TEST_CASE("three-piece decomposition of NI(P_n^2)") {
    for (int n = 7; n <= 12; ++n) {
        SquarefreeIdeal left = SquarefreeIdeal::make(n, {range_set(1, 3)});
        SquarefreeIdeal right = SquarefreeIdeal::make(n, {range_set(n - 2, n)});
        SquarefreeIdeal middle = path_ideal_window(n, 2, n - 1, 5);
        CHECK(add(add(left, middle), right) == ni_pn2(n));
    }
}

TEST_CASE("add is a minimalized union") {
    SquarefreeIdeal I = SquarefreeIdeal::make(4, sets({{1, 2, 3}}));
    CHECK(add(I, SquarefreeIdeal::zero(4)) == I);
    CHECK(add(I, SquarefreeIdeal::make(4, sets({{1, 2, 3, 4}}))) == I);
    CHECK_THROWS_AS(add(I, SquarefreeIdeal::zero(5)), std::invalid_argument);
}

TEST_CASE("colon identity behind the outer recursion") {
    // (I_5(P_{2..n-1}) + (x_1x_2x_3)) : (x_{n-2}x_{n-1}x_n) = NI(P^2_{n-3}), n >= 10
    for (int n = 10; n <= 16; ++n) {
        SquarefreeIdeal I = add(path_ideal_window(n, 2, n - 1, 5),
                                SquarefreeIdeal::make(n, {range_set(1, 3)}));
        SquarefreeIdeal colon = colon_by_monomial(I, range_set(n - 2, n));
        SquarefreeIdeal expected = SquarefreeIdeal::make(n, ni_pn2(n - 3).gens);
        CHECK(colon == expected);
    }
}

TEST_CASE("minimal primes and height") {
    PrimeList pl = minimal_primes(ni_pn2(7));
    CHECK(pl.height == 2);
    Subset p36 = from_vertices({3, 6});
    CHECK(std::find(pl.primes.begin(), pl.primes.end(), p36) != pl.primes.end());

    PrimeList principal = minimal_primes(SquarefreeIdeal::make(3, {range_set(1, 3)}));
    CHECK(principal.primes == sets({{1}, {2}, {3}}));
    CHECK(principal.height == 1);
    CHECK(principal.bight == 1);

    CHECK_THROWS_AS(minimal_primes(SquarefreeIdeal::zero(3)), std::invalid_argument);
}

TEST_CASE("minimal primes are the minimal dominating sets") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = graph_square(path_graph(n));
        DominationSummary dom = minimal_dominating_sets(g);
        PrimeList pl = minimal_primes(neighborhood_ideal(g));
        CHECK(pl.primes == dom.minimal_sets);
        CHECK(pl.height == dom.gamma);
        CHECK(pl.bight == dom.gamma_prime);
    }
}

TEST_CASE("alexander dual ideal") {
    SquarefreeIdeal edge_p3 = SquarefreeIdeal::make(3, sets({{1, 2}, {2, 3}}));
    CHECK(alexander_dual_ideal(edge_p3).gens == sets({{2}, {1, 3}}));

    SquarefreeIdeal I = ni_pn2(7);
    CHECK(alexander_dual_ideal(alexander_dual_ideal(I)) == I);
    CHECK(alexander_dual_ideal(I).gens ==
          minimal_dominating_sets(graph_square(path_graph(7))).minimal_sets);
}

TEST_CASE("complementary ideal") {
    CHECK(complementary_ideal(facet_complex(ni_pn2(7))).gens ==
          sets({{4, 5, 6, 7}, {1, 7}, {1, 2, 3, 4}}));
    // complements of the four facets of NI[P_8^2] are already an antichain
    CHECK(complementary_ideal(facet_complex(ni_pn2(8))).gens ==
          sets({{1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}, {1, 7, 8}, {1, 2, 8}}));
    // all singletons -> all (n-1)-subsets
    SimplicialComplex singletons =
        SimplicialComplex::make(4, {single(1), single(2), single(3), single(4)});
    CHECK(complementary_ideal(singletons).gens ==
          sets({{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}));
    SimplicialComplex full = SimplicialComplex::make(3, {range_set(1, 3)});
    CHECK_THROWS_AS(complementary_ideal(full), std::invalid_argument);
}

TEST_CASE("linear quotients checks") {
    SquarefreeIdeal ic7 = complementary_ideal(facet_complex(ni_pn2(7)));
    std::vector<Subset> good{from_vertices({1, 7}), from_vertices({1, 2, 3, 4}),
                             from_vertices({4, 5, 6, 7})};
    std::vector<Subset> bad{from_vertices({1, 2, 3, 4}), from_vertices({4, 5, 6, 7}),
                            from_vertices({1, 7})};
    CHECK(check_linear_quotients(ic7, good));
    CHECK(!check_linear_quotients(ic7, bad));

    SquarefreeIdeal principal = SquarefreeIdeal::make(3, {range_set(1, 3)});
    CHECK(check_linear_quotients(principal, principal.gens));

    CHECK_THROWS_AS(check_linear_quotients(ic7, std::vector<Subset>{good[0]}),
                    std::invalid_argument);
}

TEST_CASE("linear quotients order search") {
    for (int n = 7; n <= 12; ++n) {
        SquarefreeIdeal ic = complementary_ideal(facet_complex(ni_pn2(n)));
        auto order = find_linear_quotients_order(ic);
        REQUIRE(order.has_value());
        CHECK(check_linear_quotients(ic, *order));
    }
    SquarefreeIdeal cycle4 =
        SquarefreeIdeal::make(4, sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(find_linear_quotients_order(cycle4).has_value());
    SquarefreeIdeal disjoint = SquarefreeIdeal::make(4, sets({{1, 2}, {3, 4}}));
    CHECK(!find_linear_quotients_order(disjoint).has_value());
}

TEST_CASE("squarefree components") {
    SquarefreeIdeal I = SquarefreeIdeal::make(3, sets({{1, 2}}));
    CHECK(squarefree_component(I, 3).gens == sets({{1, 2, 3}}));
    CHECK(squarefree_component(ni_pn2(7), 3).gens == sets({{1, 2, 3}, {5, 6, 7}}));
    CHECK(squarefree_component(ni_pn2(7), 4).gens ==
          [] {
              // independent superset-enumeration oracle over all 4-subsets
              std::vector<Subset> expected;
              for (Subset s = 0; s < (Subset{1} << 7); ++s) {
                  if (card(s) != 4) continue;
                  for (Subset g : ni_pn2(7).gens)
                      if (subset_of(g, s)) {
                          expected.push_back(s);
                          break;
                      }
              }
              canonical_sort(expected);
              return expected;
          }());
    CHECK(squarefree_component(I, 1).is_zero());
}

TEST_CASE("ideal algebra invariants") {
    SquarefreeIdeal I = ni_pn2(9);
    // colon contains the image of every generator
    SquarefreeIdeal colon = colon_by_monomial(I, from_vertices({4, 5}));
    for (Subset g : I.gens) {
        bool covered = false;
        for (Subset c : colon.gens)
            if (subset_of(c, g & ~from_vertices({4, 5}))) covered = true;
        CHECK(covered);
    }
    // add is idempotent and commutative
    SquarefreeIdeal J = path_ideal(9, 3);
    CHECK(add(I, I) == I);
    CHECK(add(I, J) == add(J, I));
    CHECK(add(add(I, J), J) == add(I, J));
}
