#include "ppm/permutation.hpp"

#include <algorithm>
#include <string>

namespace ppm {

Permutation::Permutation(std::vector<Int> values) : values_(std::move(values)) {
    const Int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Int v : values_) {
        if (v < 1 || v > n)
            throw NotABijection("value " + std::to_string(v) + " outside [1, " +
                                std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw NotABijection("duplicate value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

bool is_certificate(const Permutation& sigma, const Permutation& pi, const Certificate& phi) {
    const Int l = sigma.size();
    if (phi.size() != l)
        throw LengthMismatch("certificate length " + std::to_string(phi.size()) +
                             " != pattern length " + std::to_string(l));
    for (Int x = 1; x <= l; ++x) {
        if (phi(x) < 1 || phi(x) > pi.size())
            return false;
        if (x > 1 && phi(x - 1) >= phi(x))
            return false;
    }
    for (Int x = 1; x <= l; ++x)
        for (Int y = x + 1; y <= l; ++y)
            if ((sigma(x) < sigma(y)) != (pi(phi(x)) < pi(phi(y))))
                return false;
    return true;
}

std::vector<Run> runs(const Permutation& pi) {
    const Int n = pi.size();
    std::vector<Run> out;
    if (n == 0)
        return out;
    if (n == 1) {
        out.push_back({1, 1, RunDirection::Increasing});
        return out;
    }
    // Every maximal monotonic stretch of a permutation of size >= 2 spans at
    // least two positions; stretches meet at turning points, which belong to
    // both neighbours.
    Int start = 1;
    RunDirection dir = pi(2) > pi(1) ? RunDirection::Increasing : RunDirection::Decreasing;
    for (Int i = 2; i <= n; ++i) {
        const bool up = pi(i) > pi(i - 1);
        const RunDirection step = up ? RunDirection::Increasing : RunDirection::Decreasing;
        if (step != dir) {
            out.push_back({start, i - start, dir});
            start = i - 1; // turning point opens the next run
            dir = step;
        }
    }
    out.push_back({start, n - start + 1, dir});
    return out;
}

Permutation pattern_of_indices(const Permutation& pi, const std::vector<Int>& indices) {
    const Int n = pi.size();
    Int prev = 0;
    for (Int i : indices) {
        if (i < 1 || i > n)
            throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(n) + "]");
        if (i <= prev)
            throw IndexOutOfRange("indices not strictly increasing at " + std::to_string(i));
        prev = i;
    }
    std::vector<Int> picked;
    picked.reserve(indices.size());
    for (Int i : indices)
        picked.push_back(pi(i));
    // rank-compress
    std::vector<Int> sorted = picked;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Int> compressed;
    compressed.reserve(picked.size());
    for (Int v : picked) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        compressed.push_back(static_cast<Int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(compressed));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<Int> values = a.values();
    values.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (Int v : b.values())
        values.push_back(v + a.size());
    return Permutation(std::move(values));
}

} // namespace ppm
