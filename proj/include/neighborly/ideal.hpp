#pragma once

#include <optional>
#include <vector>

#include "neighborly/graph.hpp"
#include "neighborly/subset.hpp"
#include "neighborly/transversal.hpp"

namespace neighborly {

struct SimplicialComplex;

// Squarefree monomial ideal, identified with the antichain of its minimal
// generator supports. The unit ideal is a distinguished flagged state; the
// zero ideal has no generators.
struct SquarefreeIdeal {
    int ambient_n = 0;
    bool unit = false;
    std::vector<Subset> gens;  // minimalized, canonically sorted

    static SquarefreeIdeal make(int n, std::vector<Subset> generators);
    static SquarefreeIdeal zero(int n);
    static SquarefreeIdeal unit_ideal(int n);

    bool is_zero() const { return !unit && gens.empty(); }
    bool is_unit() const { return unit; }

    bool operator==(const SquarefreeIdeal& other) const = default;
};

struct PrimeList {
    std::vector<Subset> primes;  // minimal monomial primes, by support
    int height = 0;
    int bight = 0;
};

SquarefreeIdeal neighborhood_ideal(const Graph& g);

// NI(P_n^2), n >= 3
SquarefreeIdeal ni_pn2(int n);

// I_t(P_n): paths of t consecutive vertices
SquarefreeIdeal path_ideal(int n, int t);

// path ideal on the vertex window {a..b} inside the full ambient ring
SquarefreeIdeal path_ideal_window(int ambient_n, int a, int b, int t);

SquarefreeIdeal colon_by_monomial(const SquarefreeIdeal& i, Subset u);

SquarefreeIdeal add(const SquarefreeIdeal& i, const SquarefreeIdeal& j);

PrimeList minimal_primes(const SquarefreeIdeal& i, std::size_t cap = kDefaultTransversalCap);

SquarefreeIdeal alexander_dual_ideal(const SquarefreeIdeal& i,
                                     std::size_t cap = kDefaultTransversalCap);

SquarefreeIdeal complementary_ideal(const SimplicialComplex& c);

bool check_linear_quotients(const SquarefreeIdeal& i, const std::vector<Subset>& order);

std::optional<std::vector<Subset>> find_linear_quotients_order(const SquarefreeIdeal& i,
                                                               std::size_t cap = 1'000'000);

// ideal generated by all degree-d squarefree monomials of i
SquarefreeIdeal squarefree_component(const SquarefreeIdeal& i, int d);

}  // namespace neighborly
