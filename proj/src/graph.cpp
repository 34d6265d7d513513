#include "ppm/graph.hpp"

#include <algorithm>
#include <string>

namespace ppm {

Graph::Graph(Int n, std::vector<std::pair<Int, Int>> edges) : n_(n) {
    if (n < 0)
        throw InvalidGraph("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v)
            std::swap(u, v);
        if (u == v)
            throw InvalidGraph("self-loop at vertex " + std::to_string(u));
        if (u < 1 || v > n)
            throw InvalidGraph("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                               "} outside [1, " + std::to_string(n) + "]");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidGraph("duplicate edge");
    edges_ = std::move(edges);
    adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u - 1)].push_back(v);
        adj_[static_cast<std::size_t>(v - 1)].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Int u, Int v) const {
    if (u == v)
        return false;
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::complete(Int n) {
    std::vector<std::pair<Int, Int>> edges;
    for (Int u = 1; u <= n; ++u)
        for (Int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    Int n = 0;
    std::vector<std::pair<Int, Int>> edges;
    for (const Graph& g : parts) {
        for (const auto& [u, v] : g.edges())
            edges.emplace_back(u + n, v + n);
        n += g.vertex_count();
    }
    return Graph(n, std::move(edges));
}

} // namespace ppm
