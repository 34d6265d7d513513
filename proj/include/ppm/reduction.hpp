#pragma once

#include <utility>
#include <vector>

#include "ppm/encoder.hpp"
#include "ppm/graph.hpp"
#include "ppm/permutation.hpp"

namespace ppm {

/// One clique-detection input: does g contain a complete subgraph on l
/// vertices? Instances with l < 1 or no vertices are treated as malformed.
struct CliqueInstance {
    Int l = 0;
    Graph g;
};

bool well_formed(const CliqueInstance& inst);

/// Two instances are equivalent when both are malformed, or both are
/// well-formed and agree on the clique size and the vertex count.
bool equivalence_check(const CliqueInstance& a, const CliqueInstance& b);

/**
 * A pattern-matching instance produced by the reduction or the composition:
 * sigma is the encoded clique, pi the encoded text graph, and input_ranges
 * records which text ordering ranks came from which input graph.
 */
struct ComposedInstance {
    Permutation sigma;
    Permutation pi;
    EncodingLayout layout_pattern;
    EncodingLayout layout_text;
    Int z = 0;
    std::vector<std::pair<Int, Int>> input_ranges;

    Int clique_size() const { return layout_pattern.vertex_count(); }
    Int input_count() const { return static_cast<Int>(input_ranges.size()); }
};

/// Removes isolated vertices, relabelling the rest 1..n' in label order.
/// For l >= 2 this preserves the answer of clique detection.
Graph strip_isolated(const Graph& g);

/**
 * Encodes (K_l, g) as a pattern-matching instance with separator length
 * z = 4n' + 4, n' the largest connected component of g. The instance is YES
 * iff g contains a clique of size l. Throws IsolatedVertex when g has one
 * (strip first), InvalidGraph when g is empty.
 */
ComposedInstance reduce_clique(const CliqueInstance& inst);

/**
 * The constructive direction: the certificate selecting, for each clique
 * vertex in ordering-rank order, its two separating runs and the entries
 * encoding edges to larger clique members. Valid for every z >= 1. The
 * clique is given by original labels; throws NotAClique when it does not
 * induce a complete subgraph.
 */
Certificate certificate_from_clique(const Graph& g, Int z, const std::vector<Int>& clique);

/**
 * The extraction direction: maps each pattern vertex v to the text vertex
 * whose left separating run receives the image of the middle entry of v's
 * left run, and cross-checks the right run. Returns original labels,
 * ascending. Sound whenever inst.z >= 4n' + 4; throws MalformedCertificate
 * when the run anchoring fails (z below threshold or corrupted data).
 */
std::vector<Int> extract_clique(const ComposedInstance& inst, const Certificate& phi);

/**
 * OR-cross-composition: the text graph is the disjoint union of the input
 * graphs and z = 4 |V(G_1)| + 4, so the pattern length depends only on l and
 * |V(G_1)|, never on the number of inputs. Throws NotEquivalent when the
 * instances do not share an equivalence class, IsolatedVertex as above.
 */
ComposedInstance compose(const std::vector<CliqueInstance>& instances);

} // namespace ppm
