#pragma once

#include <map>
#include <utility>
#include <vector>

#include "neighborly/homology.hpp"
#include "neighborly/ideal.hpp"

namespace neighborly {

struct BettiTable {
    int ambient_n = 0;
    long long field_char = 0;
    std::map<std::pair<int, int>, long long> entries;        // (i, j) -> beta_{i,j}(S/I)
    std::map<std::pair<int, Subset>, long long> multigraded;  // (i, sigma)

    int pd() const;
    int reg() const;

    bool operator==(const BettiTable& other) const = default;
};

struct EngineCaps {
    int max_ambient_hochster = 16;
    int max_ambient_koszul = 12;
    int max_ambient_seqcm = 10;
    std::size_t transversal_cap = kDefaultTransversalCap;
};

// all distinct unions of generator supports (the lcm lattice, minus the
// bottom element), sorted
std::vector<Subset> lcm_lattice(const SquarefreeIdeal& i);

// graded Betti numbers of S/I via reduced homology of induced subcomplexes
// of the Stanley-Reisner complex, restricted to the lcm lattice
BettiTable betti_hochster(const SquarefreeIdeal& i, long long field_char = 0,
                          const EngineCaps& caps = {});

// independent route: upper Koszul complexes over every squarefree multidegree
BettiTable betti_koszul_oracle(const SquarefreeIdeal& i, long long field_char = 0,
                               const EngineCaps& caps = {});

struct HomologicalInvariants {
    int pd = 0;
    int reg = 0;
    int depth = 0;
    int dim = 0;
};

HomologicalInvariants pd_reg_depth(const BettiTable& b, const SquarefreeIdeal& i);

bool is_cohen_macaulay(const SquarefreeIdeal& i, long long field_char = 0,
                       const EngineCaps& caps = {});

enum class TriState { False, True, Indeterminate };

// Herzog-Hibi criterion: every nonzero squarefree component of the Alexander
// dual has a linear resolution
TriState is_sequentially_cm(const SquarefreeIdeal& i, long long field_char = 0,
                            const EngineCaps& caps = {});

struct BightVsPd {
    int bight = 0;
    int pd = 0;
    bool equal = false;
};

BightVsPd bight_vs_pd(const SquarefreeIdeal& i, long long field_char = 0,
                      const EngineCaps& caps = {});

}  // namespace neighborly
