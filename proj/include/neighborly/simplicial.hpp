#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "neighborly/ideal.hpp"
#include "neighborly/subset.hpp"

namespace neighborly {

// default ceiling on enumerated faces; override with NEIGHBORLY_CAP_FACES
std::size_t face_cap();

// Simplicial complex on vertices 1..n given by its facets.
// Conventions: facets empty  -> the void complex (no faces at all);
//              facets == {0} -> the irrelevant complex, whose only face is {}.
struct SimplicialComplex {
    int n = 0;
    std::vector<Subset> facets;

    static SimplicialComplex make(int n, std::vector<Subset> facets);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex irrelevant(int n);

    bool is_void() const { return facets.empty(); }
    bool is_irrelevant() const { return facets.size() == 1 && facets[0] == 0; }
    bool covers_vertices() const;
    int dim() const;  // -1 for the irrelevant complex; throws on void

    bool operator==(const SimplicialComplex& other) const = default;
};

struct FHVectors {
    int dim = -1;
    std::vector<long long> f;  // f[0] = f_{-1} = 1, ..., f[dim+1]
    std::vector<long long> h;  // h_0 .. h_{dim+1}
    long long euler = 0;
    long long reduced_euler = 0;
};

// every face (including the empty set), canonically sorted
std::vector<Subset> enumerate_faces(const SimplicialComplex& c, std::size_t cap = face_cap());

SimplicialComplex facet_complex(const SquarefreeIdeal& i);

// facet ideal of a complex (inverse of facet_complex)
SquarefreeIdeal facet_ideal(const SimplicialComplex& c);

// faces = subsets containing no generator support of i
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& i,
                                          std::size_t cap = kDefaultTransversalCap);

// Stanley-Reisner ideal of a complex: generated by the minimal non-faces
SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& c,
                                      std::size_t cap = kDefaultTransversalCap);

FHVectors fh_vectors(const SimplicialComplex& c, std::size_t cap = face_cap());

// Bjorner-Wachs non-pure shellability of a fixed facet order
bool is_shelling_order(const SimplicialComplex& c, const std::vector<Subset>& order);

// facets of NI[P_n^2] in the order F_2,...,F_{n-5},F_1,F_{n-4}
std::vector<Subset> paper_shelling_order(int n);

std::optional<std::vector<Subset>> find_shelling(const SimplicialComplex& c,
                                                 std::size_t cap = 1'000'000);

bool has_free_vertex_property(const SimplicialComplex& c, int depth_cap = 1024);

SimplicialComplex alexander_dual_complex(const SimplicialComplex& c,
                                         std::size_t cap = kDefaultTransversalCap);

SimplicialComplex complement_complex(const SimplicialComplex& c);

// number of maximum-dimension facets of SR(i) = minimum-height minimal primes
long long multiplicity_from_sr(const SquarefreeIdeal& i,
                               std::size_t cap = kDefaultTransversalCap);

}  // namespace neighborly
