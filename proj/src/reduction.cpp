#include "ppm/reduction.hpp"

#include <algorithm>
#include <string>

#include "ppm/oracle.hpp"

namespace ppm {

namespace {

void require_no_isolated(const Graph& g) {
    for (Int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw IsolatedVertex("vertex " + std::to_string(v) +
                                 " is isolated; strip_isolated first");
}

ComposedInstance build_instance(Int l, const Graph& g, Int z,
                                std::vector<std::pair<Int, Int>> ranges) {
    if (l < 1)
        throw Error("clique size must be positive");
    ComposedInstance inst;
    auto [sigma, layout_pattern] = encode(Graph::complete(l), z);
    auto [pi, layout_text] = encode(g, z);
    inst.sigma = std::move(sigma);
    inst.pi = std::move(pi);
    inst.layout_pattern = std::move(layout_pattern);
    inst.layout_text = std::move(layout_text);
    inst.z = z;
    inst.input_ranges = std::move(ranges);
    return inst;
}

} // namespace

bool well_formed(const CliqueInstance& inst) {
    return inst.l >= 1 && inst.g.vertex_count() >= 1;
}

bool equivalence_check(const CliqueInstance& a, const CliqueInstance& b) {
    if (!well_formed(a) || !well_formed(b))
        return !well_formed(a) && !well_formed(b);
    return a.l == b.l && a.g.vertex_count() == b.g.vertex_count();
}

Graph strip_isolated(const Graph& g) {
    std::vector<Int> keep;
    for (Int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            keep.push_back(v);
    std::vector<Int> new_label(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        new_label[static_cast<std::size_t>(keep[i] - 1)] = static_cast<Int>(i) + 1;
    std::vector<std::pair<Int, Int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(new_label[static_cast<std::size_t>(u - 1)],
                           new_label[static_cast<std::size_t>(v - 1)]);
    return Graph(static_cast<Int>(keep.size()), std::move(edges));
}

ComposedInstance reduce_clique(const CliqueInstance& inst) {
    require_no_isolated(inst.g);
    const Int n_prime = connected_components(inst.g).largest;
    const Int z = 4 * n_prime + 4;
    return build_instance(inst.l, inst.g, z, {{1, inst.g.vertex_count()}});
}

Certificate certificate_from_clique(const Graph& g, Int z, const std::vector<Int>& clique) {
    if (clique.empty())
        throw NotAClique("empty vertex set");
    for (Int v : clique) {
        if (v < 1 || v > g.vertex_count())
            throw NotAClique("vertex " + std::to_string(v) + " out of range");
        if (std::count(clique.begin(), clique.end(), v) != 1)
            throw NotAClique("duplicate vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                throw NotAClique("vertices " + std::to_string(clique[i]) + " and " +
                                 std::to_string(clique[j]) + " are not adjacent");

    const EncodingLayout led = layout(g, z);
    std::vector<Int> ranks;
    ranks.reserve(clique.size());
    for (Int v : clique)
        ranks.push_back(led.ordering().rank_of(v));
    std::sort(ranks.begin(), ranks.end());
    std::vector<bool> in_clique(static_cast<std::size_t>(g.vertex_count() + 1), false);
    for (Int r : ranks)
        in_clique[static_cast<std::size_t>(r)] = true;

    std::vector<Int> phi;
    for (Int r : ranks) {
        const auto& rec = led.record(r);
        for (Int i = 0; i < z; ++i)
            phi.push_back(rec.p_left + i);
        const NeighborhoodStats stats = neighborhood_stats(g, led.ordering(), r);
        for (Int i = 0; i < rec.deg_plus; ++i)
            if (in_clique[static_cast<std::size_t>(stats.right[static_cast<std::size_t>(i)])])
                phi.push_back(rec.p_mid + i);
        for (Int i = 0; i < z; ++i)
            phi.push_back(rec.p_right + i);
    }
    return Certificate{std::move(phi)};
}

std::vector<Int> extract_clique(const ComposedInstance& inst, const Certificate& phi) {
    const EncodingLayout& pat = inst.layout_pattern;
    const EncodingLayout& text = inst.layout_text;
    const Int z = inst.z;
    if (phi.size() != inst.sigma.size())
        throw MalformedCertificate("certificate length does not match the pattern");

    // Text vertex whose left separating run contains the given position.
    auto run_owner = [&](Int pos) -> Int {
        Int lo = 1, hi = text.vertex_count(), owner = 0;
        while (lo <= hi) {
            const Int mid = lo + (hi - lo) / 2;
            if (text.record(mid).p_left <= pos) {
                owner = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return owner;
    };

    std::vector<Int> labels;
    std::vector<bool> used(static_cast<std::size_t>(text.vertex_count() + 1), false);
    for (Int v = 1; v <= pat.vertex_count(); ++v) {
        const Int left_pos = phi(pat.left_middle(v));
        const Int u = run_owner(left_pos);
        if (u == 0 || left_pos > text.record(u).p_left + z - 1)
            throw MalformedCertificate("middle of a left separating run not mapped into one");
        const Int right_pos = phi(pat.right_middle(v));
        if (right_pos < text.record(u).p_right || right_pos > text.record(u).p_right + z - 1)
            throw MalformedCertificate("right separating run not mapped alongside the left one");
        if (used[static_cast<std::size_t>(u)])
            throw MalformedCertificate("two pattern vertices mapped to one text vertex");
        used[static_cast<std::size_t>(u)] = true;
        labels.push_back(text.record(u).label);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

ComposedInstance compose(const std::vector<CliqueInstance>& instances) {
    if (instances.empty())
        throw Error("composition requires at least one instance");
    for (const CliqueInstance& inst : instances) {
        if (!equivalence_check(instances.front(), inst))
            throw NotEquivalent("instances disagree on clique size or vertex count");
        require_no_isolated(inst.g);
    }
    const CliqueInstance& first = instances.front();
    if (!well_formed(first))
        throw Error("cannot compose malformed instances");

    std::vector<Graph> parts;
    parts.reserve(instances.size());
    for (const CliqueInstance& inst : instances)
        parts.push_back(inst.g);
    const Int n1 = first.g.vertex_count();
    const Int z = 4 * n1 + 4;
    std::vector<std::pair<Int, Int>> ranges;
    for (std::size_t i = 0; i < instances.size(); ++i)
        ranges.emplace_back(static_cast<Int>(i) * n1 + 1, (static_cast<Int>(i) + 1) * n1);
    return build_instance(first.l, disjoint_union(parts), z, std::move(ranges));
}

} // namespace ppm
