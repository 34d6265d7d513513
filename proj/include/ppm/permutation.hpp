#pragma once

#include <cstdint>
#include <vector>

#include "ppm/errors.hpp"

namespace ppm {

/// Positions and values are 1-indexed throughout the library.
using Int = std::int64_t;

/**
 * A permutation stored as its vector representation: values()[i-1] is the
 * entry at position i, and the entries are a bijection from [1, n] to [1, n].
 *
 * The empty permutation (n = 0) is legal; it is the identity of direct_sum.
 */
class Permutation {
public:
    /// Validates that `values` is a bijection on [1, values.size()].
    /// Throws NotABijection otherwise.
    explicit Permutation(std::vector<Int> values);

    /// Empty permutation.
    Permutation() = default;

    Int size() const { return static_cast<Int>(values_.size()); }

    /// Entry at 1-indexed position i.
    Int operator()(Int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<Int>& values() const { return values_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Int> values_;
};

/// An increasing position map witnessing a pattern occurrence.
struct Certificate {
    std::vector<Int> phi; // positions in the text permutation, 1-indexed

    Int size() const { return static_cast<Int>(phi.size()); }
    Int operator()(Int x) const { return phi[static_cast<std::size_t>(x - 1)]; }

    bool operator==(const Certificate&) const = default;
};

enum class RunDirection { Increasing, Decreasing };

/// A maximal monotonic consecutive subsequence.
struct Run {
    Int start = 0;           // 1-indexed first position
    Int length = 0;
    RunDirection direction = RunDirection::Increasing;

    bool operator==(const Run&) const = default;
};

/**
 * True iff phi certifies sigma as a pattern of pi: phi is strictly
 * increasing, stays within [1, |pi|], and sigma(x) < sigma(y) iff
 * pi(phi(x)) < pi(phi(y)) for all x, y.
 *
 * Throws LengthMismatch when |phi| != |sigma|.
 */
bool is_certificate(const Permutation& sigma, const Permutation& pi, const Certificate& phi);

/**
 * The runs of pi, left to right. Each reported run is maximal, so adjacent
 * runs share exactly one position (the turning point). A singleton
 * permutation yields one increasing run of length 1.
 */
std::vector<Run> runs(const Permutation& pi);

/// The permutation order-isomorphic to pi restricted to the given strictly
/// increasing positions (rank-compressed values). Throws IndexOutOfRange.
Permutation pattern_of_indices(const Permutation& pi, const std::vector<Int>& indices);

/// Concatenates a and b with b's values shifted up by |a|.
Permutation direct_sum(const Permutation& a, const Permutation& b);

} // namespace ppm
