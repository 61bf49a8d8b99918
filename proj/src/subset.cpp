#include "neighborly/subset.hpp"

#include <algorithm>

namespace neighborly {

std::vector<int> to_vertices(Subset s) {
    std::vector<int> vs;
    while (s) {
        int b = std::countr_zero(s);
        vs.push_back(b + 1);
        s &= s - 1;
    }
    return vs;
}

Subset from_vertices(const std::vector<int>& vs) {
    Subset s = 0;
    for (int v : vs) s |= single(v);
    return s;
}

bool lex_less(Subset a, Subset b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

void canonical_sort(std::vector<Subset>& sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
}

std::vector<Subset> minimal_sets(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) { return card(a) < card(b); });
    std::vector<Subset> out;
    for (Subset s : sets) {
        bool dominated = false;
        for (Subset t : out)
            if (subset_of(t, s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    canonical_sort(out);
    return out;
}

std::vector<Subset> maximal_sets(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) { return card(a) > card(b); });
    std::vector<Subset> out;
    for (Subset s : sets) {
        bool dominated = false;
        for (Subset t : out)
            if (subset_of(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    canonical_sort(out);
    return out;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int v : to_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace neighborly
