#pragma once

#include <filesystem>
#include <iosfwd>

#include "ppm/encoder.hpp"
#include "ppm/graph.hpp"
#include "ppm/permutation.hpp"
#include "ppm/reduction.hpp"

namespace ppm::io {

/**
 * Text formats. All are whitespace-tolerant on input and canonical on
 * output; the graph and instance formats are fixed so golden files can be
 * compared byte for byte.
 *
 *   permutation  one line of space-separated values, trailing newline
 *   graph        "n m" header, then m lines "u v" with 1 <= u < v <= n;
 *                blank lines and '#' comments are ignored
 *   layout       one line per vertex in rank order:
 *                "label p_L p_M p_R q_L q_M q_R"
 *   instance dir pattern.txt, text.txt, layout.txt (text graph) and
 *                meta.txt ("l=<l> z=<z> t=<t>" plus one "range i start end"
 *                line per input)
 */

Permutation read_permutation(std::istream& in);
Permutation read_permutation_file(const std::filesystem::path& path);
void write_permutation(std::ostream& out, const Permutation& pi);
void write_permutation_file(const std::filesystem::path& path, const Permutation& pi);

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

EncodingLayout read_layout(std::istream& in, Int z);
void write_layout(std::ostream& out, const EncodingLayout& layout);

void write_instance_dir(const std::filesystem::path& dir, const ComposedInstance& inst);
ComposedInstance read_instance_dir(const std::filesystem::path& dir);

} // namespace ppm::io
