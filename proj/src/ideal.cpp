#include "neighborly/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "neighborly/simplicial.hpp"

namespace neighborly {

SquarefreeIdeal SquarefreeIdeal::make(int n, std::vector<Subset> generators) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("ambient size out of range");
    SquarefreeIdeal I;
    I.ambient_n = n;
    for (Subset g : generators) {
        if (g == 0) throw std::invalid_argument("generator support must be nonempty");
        if (!subset_of(g, full_set(n)))
            throw std::invalid_argument("generator support outside ambient variables");
    }
    I.gens = minimal_sets(std::move(generators));
    return I;
}

SquarefreeIdeal SquarefreeIdeal::zero(int n) {
    SquarefreeIdeal I;
    I.ambient_n = n;
    return I;
}

SquarefreeIdeal SquarefreeIdeal::unit_ideal(int n) {
    SquarefreeIdeal I;
    I.ambient_n = n;
    I.unit = true;
    return I;
}

SquarefreeIdeal neighborhood_ideal(const Graph& g) {
    std::vector<Subset> gens;
    gens.reserve(static_cast<std::size_t>(g.n));
    for (int v = 1; v <= g.n; ++v) gens.push_back(closed_neighborhood(g, v));
    return SquarefreeIdeal::make(g.n, std::move(gens));
}

SquarefreeIdeal ni_pn2(int n) {
    if (n < 3) throw std::invalid_argument("ni_pn2 needs n >= 3");
    return neighborhood_ideal(graph_square(path_graph(n)));
}

SquarefreeIdeal path_ideal(int n, int t) { return path_ideal_window(n, 1, n, t); }

SquarefreeIdeal path_ideal_window(int ambient_n, int a, int b, int t) {
    if (a < 1 || b > ambient_n || a > b) throw std::invalid_argument("bad vertex window");
    if (t < 2 || t > b - a + 1) throw std::invalid_argument("path length out of range");
    std::vector<Subset> gens;
    for (int i = a; i + t - 1 <= b; ++i) gens.push_back(range_set(i, i + t - 1));
    return SquarefreeIdeal::make(ambient_n, std::move(gens));
}

SquarefreeIdeal colon_by_monomial(const SquarefreeIdeal& i, Subset u) {
    if (u == 0 || !subset_of(u, full_set(i.ambient_n)))
        throw std::invalid_argument("colon monomial support out of range");
    if (i.is_unit()) return i;
    std::vector<Subset> gens;
    for (Subset g : i.gens) {
        Subset rest = g & ~u;
        if (rest == 0) return SquarefreeIdeal::unit_ideal(i.ambient_n);
        gens.push_back(rest);
    }
    return SquarefreeIdeal::make(i.ambient_n, std::move(gens));
}

SquarefreeIdeal add(const SquarefreeIdeal& i, const SquarefreeIdeal& j) {
    if (i.ambient_n != j.ambient_n) throw std::invalid_argument("ambient ring mismatch");
    if (i.is_unit() || j.is_unit()) return SquarefreeIdeal::unit_ideal(i.ambient_n);
    std::vector<Subset> gens = i.gens;
    gens.insert(gens.end(), j.gens.begin(), j.gens.end());
    return SquarefreeIdeal::make(i.ambient_n, std::move(gens));
}

PrimeList minimal_primes(const SquarefreeIdeal& i, std::size_t cap) {
    if (i.is_zero()) throw std::invalid_argument("zero ideal has no minimal monomial primes");
    if (i.is_unit()) throw std::invalid_argument("unit ideal has no minimal primes");
    PrimeList pl;
    pl.primes = minimal_transversals(i.gens, cap);
    pl.height = i.ambient_n;
    pl.bight = 0;
    for (Subset p : pl.primes) {
        pl.height = std::min(pl.height, card(p));
        pl.bight = std::max(pl.bight, card(p));
    }
    return pl;
}

SquarefreeIdeal alexander_dual_ideal(const SquarefreeIdeal& i, std::size_t cap) {
    return SquarefreeIdeal::make(i.ambient_n, minimal_primes(i, cap).primes);
}

SquarefreeIdeal complementary_ideal(const SimplicialComplex& c) {
    Subset all = full_set(c.n);
    std::vector<Subset> gens;
    for (Subset f : c.facets) {
        if (f == all) throw std::invalid_argument("full-simplex facet gives the unit ideal");
        gens.push_back(all & ~f);
    }
    if (gens.empty()) throw std::invalid_argument("complex has no facets");
    return SquarefreeIdeal::make(c.n, std::move(gens));
}

namespace {

// (m_1..m_k) : m_next generated by variables?
bool colon_is_linear(const std::vector<Subset>& prefix, Subset next) {
    std::vector<Subset> colon_gens;
    colon_gens.reserve(prefix.size());
    for (Subset m : prefix) colon_gens.push_back(m & ~next);
    for (Subset g : minimal_sets(std::move(colon_gens)))
        if (card(g) != 1) return false;
    return true;
}

}  // namespace

bool check_linear_quotients(const SquarefreeIdeal& i, const std::vector<Subset>& order) {
    if (i.is_zero() || i.is_unit()) throw std::invalid_argument("order check needs a proper ideal");
    std::vector<Subset> sorted_order = order, sorted_gens = i.gens;
    canonical_sort(sorted_order);
    if (sorted_order != sorted_gens)
        throw std::invalid_argument("order is not a permutation of the minimal generators");
    std::vector<Subset> prefix;
    for (Subset m : order) {
        if (!prefix.empty() && !colon_is_linear(prefix, m)) return false;
        prefix.push_back(m);
    }
    return true;
}

namespace {

struct OrderSearch {
    std::size_t cap;
    std::size_t nodes = 0;
    std::vector<Subset> prefix;

    bool extend(std::vector<Subset>& remaining) {
        if (remaining.empty()) return true;
        if (++nodes > cap) throw CapExceeded("linear-quotients order search cap exceeded");
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            Subset m = remaining[k];
            if (!prefix.empty() && !colon_is_linear(prefix, m)) continue;
            prefix.push_back(m);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
            if (extend(remaining)) return true;
            remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(k), m);
            prefix.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Subset>> find_linear_quotients_order(const SquarefreeIdeal& i,
                                                               std::size_t cap) {
    if (i.is_zero() || i.is_unit()) throw std::invalid_argument("order search needs a proper ideal");
    OrderSearch search{cap, 0, {}};
    std::vector<Subset> remaining = i.gens;
    if (search.extend(remaining)) return search.prefix;
    return std::nullopt;
}

SquarefreeIdeal squarefree_component(const SquarefreeIdeal& i, int d) {
    if (d < 1 || d > i.ambient_n) throw std::invalid_argument("degree out of range");
    if (i.is_unit()) throw std::invalid_argument("unit ideal has no squarefree component");
    std::vector<Subset> found;
    std::vector<int> universe;
    for (int v = 1; v <= i.ambient_n; ++v) universe.push_back(v);
    for (Subset g : i.gens) {
        int need = d - card(g);
        if (need < 0) continue;
        std::vector<int> pool;
        for (int v : universe)
            if (!contains(g, v)) pool.push_back(v);
        // all `need`-subsets of the pool
        std::vector<int> idx(static_cast<std::size_t>(need));
        auto emit = [&](auto&& self, int start, int depth, Subset acc) -> void {
            if (depth == need) {
                found.push_back(acc);
                return;
            }
            for (int k = start; k <= static_cast<int>(pool.size()) - (need - depth); ++k)
                self(self, k + 1, depth + 1, acc | single(pool[static_cast<std::size_t>(k)]));
        };
        emit(emit, 0, 0, g);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) return SquarefreeIdeal::zero(i.ambient_n);
    return SquarefreeIdeal::make(i.ambient_n, std::move(found));
}

}  // namespace neighborly
