#pragma once

#include <vector>

#include "neighborly/simplicial.hpp"
#include "neighborly/subset.hpp"

namespace neighborly {

// Ranks of reduced simplicial homology; ranks[k+1] = rank of H~_k,
// for k = -1 .. dim. Empty for the void complex.
struct HomologyProfile {
    std::vector<long long> ranks;

    long long rank(int k) const {
        std::size_t idx = static_cast<std::size_t>(k + 1);
        return idx < ranks.size() ? ranks[idx] : 0;
    }
    long long euler_reduced() const {
        long long chi = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i)
            chi += (i % 2 == 1) ? ranks[i] : -ranks[i];  // i = k+1
        return chi;
    }
};

// field_char = 0: exact rank over the rationals (integer fraction-free
// elimination); field_char = p: rank over F_p.
HomologyProfile reduced_homology(const SimplicialComplex& c, long long field_char = 0,
                                 std::size_t cap = face_cap());

// same, from an explicit face list (must be subset-closed, may include 0 = {})
HomologyProfile homology_of_faces(const std::vector<Subset>& faces, long long field_char = 0);

// exact rank over Q of a sparse integer matrix given as rows of (col, value)
long long sparse_rank_exact(std::vector<std::vector<std::pair<int, long long>>> rows);
long long sparse_rank_mod_p(std::vector<std::vector<std::pair<int, long long>>> rows,
                            long long p);

}  // namespace neighborly
