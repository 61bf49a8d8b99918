#include "neighborly/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace neighborly {

std::size_t face_cap() {
    if (const char* env = std::getenv("NEIGHBORLY_CAP_FACES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 22;
}

SimplicialComplex SimplicialComplex::make(int n, std::vector<Subset> facets) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    SimplicialComplex c;
    c.n = n;
    if (facets.size() == 1 && facets[0] == 0) {
        c.facets = std::move(facets);
        return c;
    }
    for (Subset f : facets) {
        if (f == 0) throw std::invalid_argument("facets must be nonempty");
        if (!subset_of(f, full_set(n))) throw std::invalid_argument("facet outside vertex set");
    }
    c.facets = maximal_sets(std::move(facets));
    return c;
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex c;
    c.n = n;
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant(int n) {
    SimplicialComplex c;
    c.n = n;
    c.facets = {0};
    return c;
}

bool SimplicialComplex::covers_vertices() const {
    Subset u = 0;
    for (Subset f : facets) u |= f;
    return u == full_set(n);
}

int SimplicialComplex::dim() const {
    if (is_void()) throw std::invalid_argument("void complex has no dimension");
    int d = -1;
    for (Subset f : facets) d = std::max(d, card(f) - 1);
    return d;
}

std::vector<Subset> enumerate_faces(const SimplicialComplex& c, std::size_t cap) {
    if (c.is_void()) return {};
    std::unordered_set<Subset> seen;
    for (Subset f : c.facets) {
        // all subsets of f
        Subset sub = f;
        while (true) {
            seen.insert(sub);
            if (seen.size() > cap) throw CapExceeded("face enumeration cap exceeded");
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Subset> faces(seen.begin(), seen.end());
    canonical_sort(faces);
    return faces;
}

SimplicialComplex facet_complex(const SquarefreeIdeal& i) {
    if (i.is_zero() || i.is_unit())
        throw std::invalid_argument("facet complex needs a proper nonzero ideal");
    return SimplicialComplex::make(i.ambient_n, i.gens);
}

SquarefreeIdeal facet_ideal(const SimplicialComplex& c) {
    if (c.is_void() || c.is_irrelevant())
        throw std::invalid_argument("facet ideal needs a nonempty facet list");
    return SquarefreeIdeal::make(c.n, c.facets);
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& i, std::size_t cap) {
    PrimeList primes = minimal_primes(i, cap);
    Subset all = full_set(i.ambient_n);
    std::vector<Subset> facets;
    facets.reserve(primes.primes.size());
    for (Subset p : primes.primes) facets.push_back(all & ~p);
    if (facets.size() == 1 && facets[0] == 0) return SimplicialComplex::irrelevant(i.ambient_n);
    return SimplicialComplex::make(i.ambient_n, std::move(facets));
}

SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& c, std::size_t cap) {
    if (c.is_void()) throw std::invalid_argument("void complex has no Stanley-Reisner ideal");
    Subset all = full_set(c.n);
    for (Subset f : c.facets)
        if (f == all) return SquarefreeIdeal::zero(c.n);
    // minimal non-faces = minimal transversals of the facet complements
    std::vector<Subset> cofacets;
    cofacets.reserve(c.facets.size());
    for (Subset f : c.facets) cofacets.push_back(all & ~f);
    return SquarefreeIdeal::make(c.n, minimal_transversals(cofacets, cap));
}

namespace {

long long binomial(long long m, long long k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (long long j = 1; j <= k; ++j) r = r * (m - k + j) / j;
    return r;
}

}  // namespace

FHVectors fh_vectors(const SimplicialComplex& c, std::size_t cap) {
    if (c.is_void()) throw std::invalid_argument("void complex has no f-vector");
    FHVectors out;
    out.dim = c.dim();
    out.f.assign(static_cast<std::size_t>(out.dim) + 2, 0);
    for (Subset face : enumerate_faces(c, cap)) out.f[static_cast<std::size_t>(card(face))] += 1;
    long long d = out.dim + 1;
    out.h.assign(static_cast<std::size_t>(d) + 1, 0);
    for (long long i = 0; i <= d; ++i) {
        long long hi = 0;
        for (long long j = 0; j <= i; ++j) {
            long long term = binomial(d - j, i - j) * out.f[static_cast<std::size_t>(j)];
            hi += ((i - j) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(i)] = hi;
    }
    out.euler = 0;
    for (long long i = 0; i <= out.dim; ++i) {
        long long fi = out.f[static_cast<std::size_t>(i) + 1];
        out.euler += (i % 2 == 0) ? fi : -fi;
    }
    out.reduced_euler = out.euler - 1;
    return out;
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<Subset>& order) {
    std::vector<Subset> sorted_order = order, sorted_facets = c.facets;
    canonical_sort(sorted_order);
    if (sorted_order != sorted_facets)
        throw std::invalid_argument("order is not a permutation of the facets");
    for (std::size_t j = 1; j < order.size(); ++j) {
        // vertices v with F_j \ F_l = {v} for some l < j
        Subset singles = 0;
        for (std::size_t l = 0; l < j; ++l) {
            Subset diff = order[j] & ~order[l];
            if (card(diff) == 1) singles |= diff;
        }
        for (std::size_t i = 0; i < j; ++i)
            if ((singles & order[j] & ~order[i]) == 0) return false;
    }
    return true;
}

std::vector<Subset> paper_shelling_order(int n) {
    if (n < 7) throw std::invalid_argument("paper shelling order needs n >= 7");
    std::vector<Subset> order;
    for (int i = 2; i <= n - 5; ++i) order.push_back(range_set(i, i + 4));
    order.push_back(range_set(1, 3));
    order.push_back(range_set(n - 2, n));
    return order;
}

namespace {

struct ShellingSearch {
    std::size_t cap;
    std::size_t nodes = 0;
    std::vector<Subset> prefix;

    bool admissible(Subset next) const {
        std::size_t j = prefix.size();
        if (j == 0) return true;
        Subset singles = 0;
        for (Subset f : prefix) {
            Subset diff = next & ~f;
            if (card(diff) == 1) singles |= diff;
        }
        for (std::size_t i = 0; i < j; ++i)
            if ((singles & next & ~prefix[i]) == 0) return false;
        return true;
    }

    bool extend(std::vector<Subset>& remaining) {
        if (remaining.empty()) return true;
        if (++nodes > cap) throw CapExceeded("shelling search cap exceeded");
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            Subset f = remaining[k];
            if (!admissible(f)) continue;
            prefix.push_back(f);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
            if (extend(remaining)) return true;
            remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(k), f);
            prefix.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Subset>> find_shelling(const SimplicialComplex& c, std::size_t cap) {
    if (c.is_void() || c.is_irrelevant())
        throw std::invalid_argument("shelling search needs facets");
    ShellingSearch search{cap, 0, {}};
    std::vector<Subset> remaining = c.facets;
    if (search.extend(remaining)) return search.prefix;
    return std::nullopt;
}

namespace {

bool free_vertex_property_impl(std::vector<Subset> facets, int depth,
                               std::map<std::vector<Subset>, bool>& memo) {
    if (depth < 0) throw CapExceeded("free-vertex recursion depth cap exceeded");
    if (facets.size() <= 1) return true;  // simplex (or degenerate)
    auto it = memo.find(facets);
    if (it != memo.end()) return it->second;
    bool ok = false;
    Subset all = 0;
    for (Subset f : facets) all |= f;
    for (int v : to_vertices(all)) {
        int in_count = 0;
        std::size_t home = 0;
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (contains(facets[k], v)) {
                ++in_count;
                home = k;
            }
        if (in_count != 1) continue;
        // facet deletion
        std::vector<Subset> without_facet;
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (k != home) without_facet.push_back(facets[k]);
        // vertex deletion: faces avoiding v
        std::vector<Subset> without_vertex;
        for (Subset f : facets) without_vertex.push_back(f & ~single(v));
        without_vertex = maximal_sets(std::move(without_vertex));
        if (free_vertex_property_impl(std::move(without_facet), depth - 1, memo) &&
            free_vertex_property_impl(std::move(without_vertex), depth - 1, memo)) {
            ok = true;
            break;
        }
    }
    memo[facets] = ok;
    return ok;
}

}  // namespace

bool has_free_vertex_property(const SimplicialComplex& c, int depth_cap) {
    if (c.is_void() || c.is_irrelevant()) return true;
    std::map<std::vector<Subset>, bool> memo;
    return free_vertex_property_impl(c.facets, depth_cap, memo);
}

SimplicialComplex alexander_dual_complex(const SimplicialComplex& c, std::size_t cap) {
    if (c.is_void()) throw std::invalid_argument("Alexander dual of the void complex is undefined here");
    Subset all = full_set(c.n);
    for (Subset f : c.facets)
        if (f == all) throw std::invalid_argument("Alexander dual of the full simplex is undefined here");
    if (c.is_irrelevant()) {
        // non-faces: every nonempty subset; dual facets: complements of singletons
        std::vector<Subset> facets;
        for (int v = 1; v <= c.n; ++v) facets.push_back(all & ~single(v));
        return SimplicialComplex::make(c.n, std::move(facets));
    }
    std::vector<Subset> cofacets;
    for (Subset f : c.facets) cofacets.push_back(all & ~f);
    std::vector<Subset> dual_facets;
    for (Subset nonface : minimal_transversals(cofacets, cap)) dual_facets.push_back(all & ~nonface);
    if (dual_facets.size() == 1 && dual_facets[0] == 0) return SimplicialComplex::irrelevant(c.n);
    return SimplicialComplex::make(c.n, std::move(dual_facets));
}

SimplicialComplex complement_complex(const SimplicialComplex& c) {
    if (c.is_void() || c.is_irrelevant())
        throw std::invalid_argument("complement complex needs nonempty facets");
    Subset all = full_set(c.n);
    std::vector<Subset> facets;
    for (Subset f : c.facets) {
        if (f == all) throw std::invalid_argument("full-simplex facet has empty complement");
        facets.push_back(all & ~f);
    }
    return SimplicialComplex::make(c.n, std::move(facets));
}

long long multiplicity_from_sr(const SquarefreeIdeal& i, std::size_t cap) {
    PrimeList primes = minimal_primes(i, cap);
    long long count = 0;
    for (Subset p : primes.primes)
        if (card(p) == primes.height) ++count;
    return count;
}

}  // namespace neighborly
