#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "neighborly/subset.hpp"

namespace neighborly {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultTransversalCap = 1'000'000;

// All inclusion-minimal transversals of a system of nonempty vertex sets,
// canonically sorted. Branches over the vertices of the first uncovered set
// with a forbidden-vertex discipline, then post-filters for minimality.
// Throws CapExceeded if more than `cap` sets would be produced.
std::vector<Subset> minimal_transversals(const std::vector<Subset>& edges,
                                         std::size_t cap = kDefaultTransversalCap);

}  // namespace neighborly
