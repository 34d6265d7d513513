#include "ppm/encoder.hpp"

#include <limits>
#include <string>

#include "ppm/oracle.hpp"

namespace ppm {

VertexOrdering component_order(const Graph& g) {
    const Int n = g.vertex_count();
    VertexOrdering ordering;
    ordering.rank_of_label.resize(static_cast<std::size_t>(n));
    ordering.label_of_rank.reserve(static_cast<std::size_t>(n));
    // connected_components already lists blocks by smallest label with
    // members ascending, which is exactly the tie-break we want.
    for (const auto& block : connected_components(g).blocks)
        for (Int label : block) {
            ordering.label_of_rank.push_back(label);
            ordering.rank_of_label[static_cast<std::size_t>(label - 1)] =
                static_cast<Int>(ordering.label_of_rank.size());
        }
    return ordering;
}

NeighborhoodStats neighborhood_stats(const Graph& g, const VertexOrdering& ordering, Int v) {
    NeighborhoodStats stats;
    const Int label = ordering.label_of(v);
    for (Int w : g.neighbors(label)) {
        const Int r = ordering.rank_of(w);
        (r > v ? stats.right : stats.left).push_back(r);
    }
    std::sort(stats.right.begin(), stats.right.end());
    std::sort(stats.left.begin(), stats.left.end());
    return stats;
}

Int ell(const Graph& g, const VertexOrdering& ordering, Int v, Int u) {
    if (v >= u || !g.adjacent(ordering.label_of(v), ordering.label_of(u)))
        throw NotAnEdge("{" + std::to_string(v) + ", " + std::to_string(u) +
                        "} is not an edge with v < u in ordering ranks");
    Int count = 0;
    for (Int w : g.neighbors(ordering.label_of(u)))
        if (ordering.rank_of(w) < v)
            ++count;
    return count;
}

EncodingLayout::EncodingLayout(Int z, std::vector<VertexRecord> records, VertexOrdering ordering)
    : z_(z), records_(std::move(records)), ordering_(std::move(ordering)) {}

Int EncodingLayout::length() const {
    return records_.back().p_right + z_ - 1;
}

EncodingLayout layout(const Graph& g, Int z) {
    const Int n = g.vertex_count();
    if (n < 1)
        throw InvalidGraph("encoding requires at least one vertex");
    if (z < 1)
        throw InvalidGraph("separator length must be positive");

    // Reject sizes that would overflow before doing any arithmetic on them.
    const Int max = std::numeric_limits<Int>::max();
    if (z > (max - g.edge_count()) / (2 * n))
        throw ScaleExceeded("2zn + |E| exceeds the native integer range");

    VertexOrdering ordering = component_order(g);
    std::vector<EncodingLayout::VertexRecord> records(static_cast<std::size_t>(n));
    for (Int v = 1; v <= n; ++v) {
        auto& rec = records[static_cast<std::size_t>(v - 1)];
        const NeighborhoodStats stats = neighborhood_stats(g, ordering, v);
        rec.label = ordering.label_of(v);
        rec.deg_plus = stats.deg_plus();
        rec.deg_minus = stats.deg_minus();
        if (v == 1) {
            rec.p_left = 1;
            rec.p_mid = z + 1;
            rec.q_left = 2 * z;
            rec.q_mid = z + 1;
            rec.q_right = z;
        } else {
            const auto& prev = records[static_cast<std::size_t>(v - 2)];
            rec.p_left = prev.p_right + z;
            rec.p_mid = rec.p_left + z;
            rec.q_right = prev.q_left + z;
            rec.q_mid = rec.q_right + 1;
            rec.q_left = rec.q_mid + z + rec.deg_minus - 1;
        }
        rec.p_right = rec.p_mid + rec.deg_plus;
    }
    return EncodingLayout(z, std::move(records), std::move(ordering));
}

std::pair<Permutation, EncodingLayout> encode(const Graph& g, Int z) {
    EncodingLayout led = layout(g, z);
    const Int n = g.vertex_count();
    const Int total = led.length();
    std::vector<Int> values(static_cast<std::size_t>(total), 0);
    auto put = [&](Int pos, Int val) { values[static_cast<std::size_t>(pos - 1)] = val; };

    for (Int v = 1; v <= n; ++v) {
        const auto& rec = led.record(v);
        for (Int i = 0; i < z; ++i) {
            put(rec.p_left + i, rec.q_left - i);
            put(rec.p_right + i, rec.q_right - i);
        }
        const NeighborhoodStats stats = neighborhood_stats(g, led.ordering(), v);
        for (Int i = 1; i <= rec.deg_plus; ++i) {
            const Int u = stats.right[static_cast<std::size_t>(i - 1)];
            put(rec.p_mid + i - 1,
                led.record(u).q_mid + ell(g, led.ordering(), v, u));
        }
    }
    return {Permutation(std::move(values)), std::move(led)};
}

Int edge_entry_count(const Permutation& pi, const EncodingLayout& layout, Int u, Int v) {
    const auto [lo, hi] = layout.enc_interval(u);
    const auto& rv = layout.record(v);
    const Int val_lo = rv.q_mid;
    const Int val_hi = rv.q_mid + rv.deg_minus - 1; // empty when deg_minus = 0
    Int count = 0;
    for (Int p = lo; p <= hi; ++p)
        if (pi(p) >= val_lo && pi(p) <= val_hi)
            ++count;
    return count;
}

bool edge_indicator(const Permutation& pi, const EncodingLayout& layout, Int u, Int v) {
    return edge_entry_count(pi, layout, u, v) == 1;
}

} // namespace ppm
