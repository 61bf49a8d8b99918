#include "neighborly/betti.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace neighborly {

int BettiTable::pd() const {
    int pd = 0;
    for (const auto& [ij, beta] : entries)
        if (beta != 0) pd = std::max(pd, ij.first);
    return pd;
}

int BettiTable::reg() const {
    int reg = 0;
    for (const auto& [ij, beta] : entries)
        if (beta != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

std::vector<Subset> lcm_lattice(const SquarefreeIdeal& i) {
    std::unordered_set<Subset> seen;
    std::vector<Subset> work(i.gens);
    seen.insert(work.begin(), work.end());
    while (!work.empty()) {
        Subset s = work.back();
        work.pop_back();
        for (Subset g : i.gens) {
            Subset u = s | g;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    std::vector<Subset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// is_contained[m] = some generator support is a subset of m
std::vector<bool> contains_generator_table(const SquarefreeIdeal& i) {
    std::size_t size = std::size_t{1} << i.ambient_n;
    std::vector<bool> table(size, false);
    for (Subset g : i.gens) table[g] = true;
    for (int v = 0; v < i.ambient_n; ++v) {
        Subset bit = Subset{1} << v;
        for (Subset m = 0; m < size; ++m)
            if ((m & bit) && table[m & ~bit]) table[m] = true;
    }
    return table;
}

void check_proper(const SquarefreeIdeal& i) {
    if (i.is_unit()) throw std::invalid_argument("Betti engine needs a non-unit ideal");
}

void aggregate(BettiTable& table) {
    for (const auto& [key, beta] : table.multigraded)
        table.entries[{key.first, card(key.second)}] += beta;
    table.entries[{0, 0}] = 1;
}

}  // namespace

BettiTable betti_hochster(const SquarefreeIdeal& i, long long field_char, const EngineCaps& caps) {
    check_proper(i);
    if (i.ambient_n > caps.max_ambient_hochster)
        throw CapExceeded("ambient size beyond the Hochster engine cap");
    BettiTable table;
    table.ambient_n = i.ambient_n;
    table.field_char = field_char;
    if (i.is_zero()) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    std::vector<bool> in_ideal = contains_generator_table(i);
    for (Subset sigma : lcm_lattice(i)) {
        // faces of the Stanley-Reisner complex induced on sigma
        std::vector<Subset> faces;
        Subset sub = sigma;
        while (true) {
            if (!in_ideal[sub]) faces.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & sigma;
        }
        HomologyProfile profile = homology_of_faces(faces, field_char);
        int size = card(sigma);
        for (std::size_t idx = 0; idx < profile.ranks.size(); ++idx) {
            if (profile.ranks[idx] == 0) continue;
            int k = static_cast<int>(idx) - 1;
            int hom_index = size - k - 1;  // beta_{i,sigma}(S/I), i = |sigma| - k - 1
            if (hom_index >= 1) table.multigraded[{hom_index, sigma}] = profile.ranks[idx];
        }
    }
    aggregate(table);
    return table;
}

BettiTable betti_koszul_oracle(const SquarefreeIdeal& i, long long field_char,
                               const EngineCaps& caps) {
    check_proper(i);
    if (i.ambient_n > caps.max_ambient_koszul)
        throw CapExceeded("ambient size beyond the Koszul oracle cap");
    BettiTable table;
    table.ambient_n = i.ambient_n;
    table.field_char = field_char;
    if (i.is_zero()) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    std::vector<bool> in_ideal = contains_generator_table(i);
    std::size_t size = std::size_t{1} << i.ambient_n;
    for (Subset sigma = 1; sigma < size; ++sigma) {
        if (!in_ideal[sigma]) continue;  // upper Koszul complex is void
        // K^sigma = { tau subset of sigma : sigma \ tau lies in the ideal }
        std::vector<Subset> faces;
        Subset sub = sigma;
        while (true) {
            if (in_ideal[sigma & ~sub]) faces.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & sigma;
        }
        HomologyProfile profile = homology_of_faces(faces, field_char);
        for (std::size_t idx = 0; idx < profile.ranks.size(); ++idx) {
            if (profile.ranks[idx] == 0) continue;
            int k = static_cast<int>(idx) - 1;
            // beta_{k+1,sigma}(I) = rank H~_k(K^sigma); shift by one for S/I
            table.multigraded[{k + 2, sigma}] = profile.ranks[idx];
        }
    }
    aggregate(table);
    return table;
}

HomologicalInvariants pd_reg_depth(const BettiTable& b, const SquarefreeIdeal& i) {
    if (b.ambient_n != i.ambient_n) throw std::invalid_argument("ambient ring mismatch");
    HomologicalInvariants inv;
    inv.pd = b.pd();
    inv.reg = b.reg();
    inv.depth = i.ambient_n - inv.pd;
    inv.dim = i.is_zero() ? i.ambient_n : i.ambient_n - minimal_primes(i).height;
    return inv;
}

bool is_cohen_macaulay(const SquarefreeIdeal& i, long long field_char, const EngineCaps& caps) {
    check_proper(i);
    if (i.is_zero()) return true;
    BettiTable b = betti_hochster(i, field_char, caps);
    return b.pd() == minimal_primes(i, caps.transversal_cap).height;
}

TriState is_sequentially_cm(const SquarefreeIdeal& i, long long field_char,
                            const EngineCaps& caps) {
    check_proper(i);
    if (i.is_zero()) return TriState::True;
    if (i.ambient_n > caps.max_ambient_seqcm) return TriState::Indeterminate;
    SquarefreeIdeal dual = alexander_dual_ideal(i, caps.transversal_cap);
    for (int d = 1; d <= i.ambient_n; ++d) {
        SquarefreeIdeal component = squarefree_component(dual, d);
        if (component.is_zero()) continue;
        BettiTable b = betti_hochster(component, field_char, caps);
        if (b.reg() != d - 1) return TriState::False;  // linear resolution: reg(S/J) = d-1
    }
    return TriState::True;
}

BightVsPd bight_vs_pd(const SquarefreeIdeal& i, long long field_char, const EngineCaps& caps) {
    BightVsPd out;
    out.bight = minimal_primes(i, caps.transversal_cap).bight;
    out.pd = betti_hochster(i, field_char, caps).pd();
    out.equal = out.bight == out.pd;
    return out;
}

}  // namespace neighborly
