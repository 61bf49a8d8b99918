#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace neighborly {

// Vertex subsets of {1..n}, n <= 64, as bitmasks; bit (v-1) <-> vertex v.
using Subset = std::uint64_t;

constexpr int kMaxVertices = 64;

inline bool contains(Subset s, int v) { return (s >> (v - 1)) & 1u; }
inline Subset single(int v) { return Subset{1} << (v - 1); }
inline int card(Subset s) { return std::popcount(s); }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// {a, a+1, ..., b}; empty if b < a
inline Subset range_set(int a, int b) {
    Subset s = 0;
    for (int v = a; v <= b; ++v) s |= single(v);
    return s;
}

inline Subset full_set(int n) { return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

std::vector<int> to_vertices(Subset s);
Subset from_vertices(const std::vector<int>& vs);

// lexicographic order on sorted vertex lists, e.g. {1,2} < {1,2,3} < {1,3} < {2}
bool lex_less(Subset a, Subset b);

void canonical_sort(std::vector<Subset>& sets);

// minimal elements under inclusion, canonically sorted
std::vector<Subset> minimal_sets(std::vector<Subset> sets);
// maximal elements under inclusion, canonically sorted
std::vector<Subset> maximal_sets(std::vector<Subset> sets);

std::string subset_to_string(Subset s);

}  // namespace neighborly
