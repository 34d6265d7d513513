#include "ppm/oracle.hpp"

#include <algorithm>
#include <string>

namespace ppm {

namespace {

bool induces_clique(const Graph& g, const std::vector<Int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

} // namespace

std::optional<std::vector<Int>> has_clique(const Graph& g, Int l) {
    const Int n = g.vertex_count();
    if (l < 1)
        throw ScaleExceeded("clique size must be positive");
    if (n > 20 && l > 5)
        throw ScaleExceeded("exhaustive clique search limited to n <= 20 or l <= 5");
    if (l > n)
        return std::nullopt;

    // l-subsets in lexicographic order; the first witness is returned.
    std::vector<Int> pick(static_cast<std::size_t>(l));
    for (Int i = 0; i < l; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        if (induces_clique(g, pick))
            return pick;
        Int i = l - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (l - 1 - i))
            --i;
        if (i < 0)
            return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (Int j = i + 1; j < l; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Components connected_components(const Graph& g) {
    const Int n = g.vertex_count();
    Components out;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (Int s = 1; s <= n; ++s) {
        if (visited[static_cast<std::size_t>(s - 1)])
            continue;
        std::vector<Int> block{s};
        visited[static_cast<std::size_t>(s - 1)] = true;
        for (std::size_t head = 0; head < block.size(); ++head)
            for (Int w : g.neighbors(block[head]))
                if (!visited[static_cast<std::size_t>(w - 1)]) {
                    visited[static_cast<std::size_t>(w - 1)] = true;
                    block.push_back(w);
                }
        std::sort(block.begin(), block.end());
        out.largest = std::max(out.largest, static_cast<Int>(block.size()));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

} // namespace ppm
