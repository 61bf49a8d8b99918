#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "neighborly/betti.hpp"
#include "neighborly/formulas.hpp"

using namespace neighborly;

namespace {

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Subset> out;
    for (const auto& l : lists) out.push_back(from_vertices(std::vector<int>(l)));
    canonical_sort(out);
    return out;
}

long long beta(const BettiTable& b, int i, int j) {
    auto it = b.entries.find({i, j});
    return it == b.entries.end() ? 0 : it->second;
}

SquarefreeIdeal random_ideal(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(3, 8);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_int_distribution<Subset> set_dist(1, full_set(n));
    std::vector<Subset> gens;
    int count = count_dist(rng);
    for (int k = 0; k < count; ++k) gens.push_back(set_dist(rng));
    return SquarefreeIdeal::make(n, std::move(gens));
}

}  // namespace

TEST_CASE("hochster engine on the small family") {
    BettiTable b6 = betti_hochster(ni_pn2(6));
    CHECK(beta(b6, 1, 3) == 2);
    CHECK(beta(b6, 2, 6) == 1);
    CHECK(b6.pd() == 2);
    CHECK(b6.reg() == 4);

    BettiTable b5 = betti_hochster(ni_pn2(5));
    CHECK(beta(b5, 1, 3) == 2);
    CHECK(beta(b5, 2, 5) == 1);
    CHECK(b5.pd() == 2);
    CHECK(b5.reg() == 3);

    BettiTable b7 = betti_hochster(ni_pn2(7));
    CHECK(b7.pd() == 3);
    CHECK(b7.reg() == 4);
}

TEST_CASE("koszul oracle basics") {
    BettiTable principal = betti_koszul_oracle(SquarefreeIdeal::make(4, sets({{1, 2, 3}})));
    CHECK(principal.entries ==
          std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 3}, 1}});

    BettiTable edge = betti_koszul_oracle(SquarefreeIdeal::make(3, sets({{1, 2}, {2, 3}})));
    CHECK(beta(edge, 1, 2) == 2);
    CHECK(beta(edge, 2, 3) == 1);
    CHECK(edge.pd() == 2);
}

TEST_CASE("the two engines agree") {
    for (int n = 3; n <= 10; ++n)
        CHECK(betti_hochster(ni_pn2(n)) == betti_koszul_oracle(ni_pn2(n)));

    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        SquarefreeIdeal I = random_ideal(rng);
        CAPTURE(I.ambient_n);
        BettiTable h = betti_hochster(I);
        BettiTable k = betti_koszul_oracle(I);
        CHECK(h.entries == k.entries);
        CHECK(h.multigraded == k.multigraded);
    }
}

TEST_CASE("beta_1 is the generator degree census") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SquarefreeIdeal I = random_ideal(rng);
        BettiTable b = betti_hochster(I);
        std::map<int, long long> census;
        for (Subset g : I.gens) ++census[card(g)];
        for (auto [deg, count] : census) CHECK(beta(b, 1, deg) == count);
        for (const auto& [ij, value] : b.entries)
            if (ij.first == 1) CHECK(census[ij.second] == value);
    }
}

TEST_CASE("pd, reg, depth, dim") {
    SquarefreeIdeal I7 = ni_pn2(7);
    HomologicalInvariants inv = pd_reg_depth(betti_hochster(I7), I7);
    CHECK(inv.pd == 3);
    CHECK(inv.reg == 4);
    CHECK(inv.depth == 4);
    CHECK(inv.dim == 5);

    SquarefreeIdeal I12 = ni_pn2(12);
    BettiTable b12 = betti_hochster(I12);
    CHECK(b12.pd() == 4);
    CHECK(b12.reg() == 8);

    SquarefreeIdeal I3 = ni_pn2(3);
    BettiTable b3 = betti_hochster(I3);
    CHECK(b3.pd() == 1);
    CHECK(b3.reg() == 2);
}

TEST_CASE("cohen-macaulayness") {
    CHECK(is_cohen_macaulay(ni_pn2(6)));
    CHECK(!is_cohen_macaulay(ni_pn2(7)));
    CHECK(is_cohen_macaulay(SquarefreeIdeal::make(5, sets({{1, 2, 3}}))));
}

TEST_CASE("sequentially cohen-macaulay") {
    for (int n = 7; n <= 10; ++n) CHECK(is_sequentially_cm(ni_pn2(n)) == TriState::True);
    CHECK(is_sequentially_cm(ni_pn2(6)) == TriState::True);
    // the 4-cycle edge ideal is the classical non-example: its dual
    // (x1x3, x2x4) has two disjoint supports and no linear resolution
    SquarefreeIdeal cycle4 = SquarefreeIdeal::make(4, sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(is_sequentially_cm(cycle4) == TriState::False);
    EngineCaps tight;
    tight.max_ambient_seqcm = 5;
    CHECK(is_sequentially_cm(ni_pn2(7), 0, tight) == TriState::Indeterminate);
}

TEST_CASE("big height against projective dimension") {
    BightVsPd b7 = bight_vs_pd(ni_pn2(7));
    CHECK(b7.bight == 3);
    CHECK(b7.pd == 3);
    CHECK(b7.equal);
    BightVsPd b10 = bight_vs_pd(ni_pn2(10));
    CHECK(b10.bight == 4);
    CHECK(b10.pd == 4);
    CHECK(b10.equal);
}

TEST_CASE("path ideal formulas at desk scale") {
    for (int n = 2; n <= 9; ++n)
        for (int t = 2; t <= n; ++t) {
            BettiTable b = betti_hochster(path_ideal(n, t));
            PdReg expected = pdpath_formula(n, t);
            CAPTURE(n);
            CAPTURE(t);
            CHECK(b.pd() == expected.pd);
            CHECK(b.reg() == expected.reg);
        }
}

TEST_CASE("engine caps are reported") {
    EngineCaps caps;
    caps.max_ambient_hochster = 5;
    CHECK_THROWS_AS(betti_hochster(ni_pn2(7), 0, caps), CapExceeded);
    CHECK_THROWS_AS(betti_koszul_oracle(ni_pn2(14)), CapExceeded);
    CHECK_THROWS_AS(betti_hochster(SquarefreeIdeal::unit_ideal(3)), std::invalid_argument);
}

TEST_CASE("zero ideal betti table") {
    BettiTable b = betti_hochster(SquarefreeIdeal::zero(4));
    CHECK(b.pd() == 0);
    CHECK(b.reg() == 0);
    CHECK(b.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}});
}
