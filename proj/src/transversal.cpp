#include "neighborly/transversal.hpp"

#include <algorithm>

namespace neighborly {

namespace {

struct Enumerator {
    const std::vector<Subset>& edges;
    std::size_t cap;
    std::vector<Subset> found;

    void recurse(Subset chosen, Subset forbidden) {
        const Subset* uncovered = nullptr;
        for (const Subset& e : edges)
            if ((e & chosen) == 0) {
                uncovered = &e;
                break;
            }
        if (!uncovered) {
            if (is_minimal(chosen)) {
                if (found.size() >= cap)
                    throw CapExceeded("transversal enumeration cap exceeded");
                found.push_back(chosen);
            }
            return;
        }
        Subset candidates = *uncovered & ~forbidden;
        Subset done = 0;
        while (candidates) {
            int b = std::countr_zero(candidates);
            Subset v = Subset{1} << b;
            candidates &= candidates - 1;
            recurse(chosen | v, forbidden | done);
            done |= v;
        }
    }

    bool is_minimal(Subset t) const {
        // each chosen vertex needs a private edge
        Subset rest = t;
        while (rest) {
            Subset v = rest & (~rest + 1);
            bool has_private = false;
            for (const Subset& e : edges)
                if ((e & t) == v) {
                    has_private = true;
                    break;
                }
            if (!has_private) return false;
            rest &= rest - 1;
        }
        return true;
    }
};

}  // namespace

std::vector<Subset> minimal_transversals(const std::vector<Subset>& edges, std::size_t cap) {
    for (Subset e : edges)
        if (e == 0) throw std::invalid_argument("empty set has no transversal");
    Enumerator en{edges, cap, {}};
    en.recurse(0, 0);
    std::sort(en.found.begin(), en.found.end());
    en.found.erase(std::unique(en.found.begin(), en.found.end()), en.found.end());
    canonical_sort(en.found);
    return en.found;
}

}  // namespace neighborly
