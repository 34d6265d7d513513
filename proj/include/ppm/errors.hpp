#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input values are not a bijection on [1, n].
struct NotABijection : Error {
    explicit NotABijection(const std::string& what) : Error(what) {}
};

/// Certificate length differs from pattern length.
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

/// Index sequence leaves [1, n] or is not strictly increasing.
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Search node limit reached before a definite answer.
struct BudgetExhausted : Error {
    explicit BudgetExhausted(const std::string& what, std::uint64_t nodes)
        : Error(what), nodes_explored(nodes) {}
    std::uint64_t nodes_explored;
};

/// Input exceeds the documented size bounds of an exact / brute-force routine,
/// or a computed quantity would overflow the native integer range.
struct ScaleExceeded : Error {
    explicit ScaleExceeded(const std::string& what) : Error(what) {}
};

/// Requested pair is not an edge of the graph.
struct NotAnEdge : Error {
    explicit NotAnEdge(const std::string& what) : Error(what) {}
};

/// Graph has an isolated vertex where the reduction forbids one.
struct IsolatedVertex : Error {
    explicit IsolatedVertex(const std::string& what) : Error(what) {}
};

/// Vertex set does not induce a complete subgraph.
struct NotAClique : Error {
    explicit NotAClique(const std::string& what) : Error(what) {}
};

/// Instances do not belong to the same equivalence class.
struct NotEquivalent : Error {
    explicit NotEquivalent(const std::string& what) : Error(what) {}
};

/// Certificate does not have the run-anchored structure required for
/// clique extraction (separator length below threshold, or corrupted data).
struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& what) : Error(what) {}
};

/// Structurally invalid graph description (self-loop, duplicate edge,
/// vertex out of range).
struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& what) : Error(what) {}
};

/// Malformed text input (graph, permutation, layout or meta files).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace ppm
