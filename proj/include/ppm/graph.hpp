#pragma once

#include <utility>
#include <vector>

#include "ppm/permutation.hpp"

namespace ppm {

/**
 * Simple undirected graph on vertices 1..n. Edges are stored as ordered
 * pairs (u, v) with u < v; construction rejects self-loops, duplicates and
 * out-of-range endpoints.
 */
class Graph {
public:
    Graph() = default;

    /// Throws InvalidGraph on self-loops, duplicates or endpoints outside
    /// [1, n]. Input pairs may be given in either orientation.
    Graph(Int n, std::vector<std::pair<Int, Int>> edges);

    Int vertex_count() const { return n_; }
    Int edge_count() const { return static_cast<Int>(edges_.size()); }

    /// Sorted edge list, each pair with first < second.
    const std::vector<std::pair<Int, Int>>& edges() const { return edges_; }

    /// Sorted neighbour list of v.
    const std::vector<Int>& neighbors(Int v) const {
        return adj_[static_cast<std::size_t>(v - 1)];
    }

    bool adjacent(Int u, Int v) const;

    Int degree(Int v) const { return static_cast<Int>(neighbors(v).size()); }

    static Graph complete(Int n);

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Int n_ = 0;
    std::vector<std::pair<Int, Int>> edges_;
    std::vector<std::vector<Int>> adj_;
};

/// The disjoint union: vertices of parts[i] are shifted past all vertices of
/// earlier parts, so each input occupies a consecutive label block.
Graph disjoint_union(const std::vector<Graph>& parts);

} // namespace ppm
