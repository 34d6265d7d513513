#pragma once

#include <cstdint>
#include <optional>

#include "ppm/permutation.hpp"

namespace ppm {

struct MatchResult {
    bool found = false;
    std::optional<Certificate> certificate; // present iff found
    std::uint64_t nodes_explored = 0;

    explicit operator bool() const { return found; }
};

/**
 * Decides whether sigma is a pattern of pi by depth-first assignment of
 * pattern positions left to right, scanning candidate text positions in
 * ascending order. The certificate returned for a YES instance is therefore
 * the lexicographically least one. Pruning: value windows with a capacity
 * check per window, remaining-length cuts, and run compression (a monotonic
 * stretch of sigma can only start at a text position whose monotonic
 * subsequence reach is long enough).
 *
 * `budget` caps the number of search-tree nodes (committed assignments);
 * BudgetExhausted is thrown when the cap is hit before a definite answer.
 */
MatchResult contains_pattern(const Permutation& sigma, const Permutation& pi,
                             std::optional<std::uint64_t> budget = std::nullopt);

/// Exact number of increasing index sequences certifying sigma in pi, by
/// enumeration of all combinations. Oracle scale: |sigma| <= 12, |pi| <= 20;
/// throws ScaleExceeded beyond.
Int count_occurrences(const Permutation& sigma, const Permutation& pi);

/// Number of permutations of [n] not containing sigma as a pattern, by
/// enumeration of all n! permutations. n <= 10; throws ScaleExceeded beyond.
Int avoiders_count(const Permutation& sigma, Int n);

/// Independent ground truth: exhaustive subsequence enumeration with no
/// pruning. |pi| <= 14; throws ScaleExceeded beyond.
bool contains_pattern_oracle(const Permutation& sigma, const Permutation& pi);

/// The first certifying index sequence in lexicographic order, by the same
/// exhaustive enumeration as contains_pattern_oracle. Test anchor for the
/// matcher's least-certificate guarantee.
std::optional<Certificate> oracle_certificate(const Permutation& sigma, const Permutation& pi);

} // namespace ppm
