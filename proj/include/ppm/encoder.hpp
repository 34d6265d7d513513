#pragma once

#include <utility>
#include <vector>

#include "ppm/graph.hpp"
#include "ppm/permutation.hpp"

namespace ppm {

/**
 * A total order on the vertices that keeps every connected component in a
 * consecutive block of ranks. Components are ordered by their smallest
 * original label, vertices ascending within a component.
 */
struct VertexOrdering {
    std::vector<Int> rank_of_label; // 1-indexed: rank_of_label[label-1]
    std::vector<Int> label_of_rank; // 1-indexed: label_of_rank[rank-1]

    Int size() const { return static_cast<Int>(label_of_rank.size()); }
    Int rank_of(Int label) const { return rank_of_label[static_cast<std::size_t>(label - 1)]; }
    Int label_of(Int rank) const { return label_of_rank[static_cast<std::size_t>(rank - 1)]; }
};

VertexOrdering component_order(const Graph& g);

/// Right/left neighbourhoods of a vertex, all in ordering ranks.
struct NeighborhoodStats {
    std::vector<Int> right; // ranks u > v with {u, v} an edge, ascending
    std::vector<Int> left;  // ranks u < v with {u, v} an edge, ascending

    Int deg_plus() const { return static_cast<Int>(right.size()); }
    Int deg_minus() const { return static_cast<Int>(left.size()); }
};

NeighborhoodStats neighborhood_stats(const Graph& g, const VertexOrdering& ordering, Int v);

/// Number of neighbours of u strictly before v in the ordering, for an edge
/// {v, u} with v < u (ranks). Throws NotAnEdge otherwise.
Int ell(const Graph& g, const VertexOrdering& ordering, Int v, Int u);

/**
 * Per-vertex position/value ledger of the encoding permutation. Records are
 * indexed by ordering rank and remember the original label, so downstream
 * clique extraction can translate back.
 */
class EncodingLayout {
public:
    struct VertexRecord {
        Int label = 0;
        Int p_left = 0;   // first position of the left separating run
        Int p_mid = 0;    // first position of the block encoding the right-neighbourhood
        Int p_right = 0;  // first position of the right separating run
        Int q_left = 0;   // starting (largest) value of the left separating run
        Int q_mid = 0;    // least value reserved for edges arriving from the left
        Int q_right = 0;  // starting (largest) value of the right separating run
        Int deg_plus = 0;
        Int deg_minus = 0;
    };

    EncodingLayout() = default;
    EncodingLayout(Int z, std::vector<VertexRecord> records, VertexOrdering ordering);

    Int z() const { return z_; }
    Int vertex_count() const { return static_cast<Int>(records_.size()); }

    /// Total permutation length, 2zn + |E|.
    Int length() const;

    const VertexRecord& record(Int rank) const {
        return records_[static_cast<std::size_t>(rank - 1)];
    }
    const std::vector<VertexRecord>& records() const { return records_; }
    const VertexOrdering& ordering() const { return ordering_; }

    /// Position interval [p_mid, p_right - 1] of the entries encoding the
    /// vertex; empty when deg_plus = 0 (first > second).
    std::pair<Int, Int> enc_interval(Int rank) const {
        const auto& r = record(rank);
        return {r.p_mid, r.p_right - 1};
    }

    /// Middle position of the left separating run.
    Int left_middle(Int rank) const { return record(rank).p_left + z_ / 2; }

    /// Middle position of the right separating run.
    Int right_middle(Int rank) const { return record(rank).p_right + z_ / 2; }

private:
    Int z_ = 0;
    std::vector<VertexRecord> records_;
    VertexOrdering ordering_;
};

/// Builds the ledger for separator length z without materializing the
/// permutation. Throws ScaleExceeded when 2zn + |E| overflows, InvalidGraph
/// on an empty graph, and rejects z < 1.
EncodingLayout layout(const Graph& g, Int z);

/// The encoding permutation of g together with its ledger.
std::pair<Permutation, EncodingLayout> encode(const Graph& g, Int z);

/// Number of entries with position in [p_mid(u), p_right(u) - 1] and value
/// in [q_mid(v), q_mid(v) + deg_minus(v) - 1]; never exceeds 1 for a
/// permutation produced by encode. Ranks u < v.
Int edge_entry_count(const Permutation& pi, const EncodingLayout& layout, Int u, Int v);

/// True iff exactly one entry lies in the rectangle above, which for an
/// encoded permutation happens iff {u, v} is an edge. Ranks u < v.
bool edge_indicator(const Permutation& pi, const EncodingLayout& layout, Int u, Int v);

} // namespace ppm
