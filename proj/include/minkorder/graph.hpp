#pragma once

#include <set>
#include <utility>

#include "minkorder/polynomial.hpp"

namespace minkorder {

/// Simple undirected graph on vertices [0..k).
struct Graph {
    int k = 0;
    std::set<std::pair<int, int>> edges; // i < j

    void validate() const;
};

/// Chromatic polynomial by deletion-contraction with memoization.
/// Contraction collapses parallel edges (they do not change the polynomial).
IntPoly chromatic_polynomial(const Graph& g);

} // namespace minkorder
