#pragma once

#include <optional>
#include <vector>

#include "ppm/graph.hpp"

namespace ppm {

/**
 * Brute-force ground truth used by the property suites. Nothing here is
 * clever on purpose: exhaustive subset search and plain traversal.
 */

/// The first l-subset (in lexicographic order) inducing a complete subgraph,
/// or nullopt when none exists. Enforces the desk-scale bound
/// n <= 20 or l <= 5 and throws ScaleExceeded beyond it.
std::optional<std::vector<Int>> has_clique(const Graph& g, Int l);

struct Components {
    /// Blocks ordered by smallest member, vertices ascending within a block.
    std::vector<std::vector<Int>> blocks;
    /// Number of vertices in the largest connected component (0 for n = 0).
    Int largest = 0;
};

Components connected_components(const Graph& g);

} // namespace ppm
