#include "ppm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ppm::io {

namespace {

namespace fs = std::filesystem;

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path.string() + " for writing");
    return out;
}

Int parse_int(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    Int value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got \"" + token + "\"");
    }
    if (used != token.size())
        throw ParseError("trailing characters after " + what + ": \"" + token + "\"");
    return value;
}

// Whitespace-separated tokens with '#' comments stripped.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }
    return tokens;
}

} // namespace

Permutation read_permutation(std::istream& in) {
    std::vector<Int> values;
    for (const std::string& tok : tokenize(in))
        values.push_back(parse_int(tok, "permutation entry"));
    return Permutation(std::move(values));
}

Permutation read_permutation_file(const fs::path& path) {
    auto in = open_input(path);
    return read_permutation(in);
}

void write_permutation(std::ostream& out, const Permutation& pi) {
    for (Int i = 1; i <= pi.size(); ++i)
        out << (i > 1 ? " " : "") << pi(i);
    out << "\n";
}

void write_permutation_file(const fs::path& path, const Permutation& pi) {
    auto out = open_output(path);
    write_permutation(out, pi);
}

Graph read_graph(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.size() < 2)
        throw ParseError("graph header \"n m\" missing");
    const Int n = parse_int(tokens[0], "vertex count");
    const Int m = parse_int(tokens[1], "edge count");
    if (n < 0 || m < 0)
        throw ParseError("negative graph header");
    if (static_cast<Int>(tokens.size()) != 2 + 2 * m)
        throw ParseError("expected " + std::to_string(2 * m) + " edge endpoints, got " +
                         std::to_string(tokens.size() - 2));
    std::vector<std::pair<Int, Int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (Int i = 0; i < m; ++i) {
        const Int u = parse_int(tokens[static_cast<std::size_t>(2 + 2 * i)], "edge endpoint");
        const Int v = parse_int(tokens[static_cast<std::size_t>(3 + 2 * i)], "edge endpoint");
        if (u >= v)
            throw ParseError("edge \"" + std::to_string(u) + " " + std::to_string(v) +
                             "\" violates u < v");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
}

Graph read_graph_file(const fs::path& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << u << " " << v << "\n";
}

void write_graph_file(const fs::path& path, const Graph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

EncodingLayout read_layout(std::istream& in, Int z) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.empty() || tokens.size() % 7 != 0)
        throw ParseError("layout must hold 7 numbers per vertex");
    const Int n = static_cast<Int>(tokens.size() / 7);
    std::vector<EncodingLayout::VertexRecord> records(static_cast<std::size_t>(n));
    Int max_label = 0;
    for (Int v = 0; v < n; ++v) {
        auto& rec = records[static_cast<std::size_t>(v)];
        const auto at = [&](int k) { return tokens[static_cast<std::size_t>(7 * v + k)]; };
        rec.label = parse_int(at(0), "vertex label");
        rec.p_left = parse_int(at(1), "p_L");
        rec.p_mid = parse_int(at(2), "p_M");
        rec.p_right = parse_int(at(3), "p_R");
        rec.q_left = parse_int(at(4), "q_L");
        rec.q_mid = parse_int(at(5), "q_M");
        rec.q_right = parse_int(at(6), "q_R");
        rec.deg_plus = rec.p_right - rec.p_mid;
        rec.deg_minus = rec.q_left - rec.q_mid - z + 1;
        if (rec.label < 1 || rec.deg_plus < 0 || rec.deg_minus < 0)
            throw ParseError("inconsistent layout record for label " + std::to_string(rec.label));
        if (rec.p_mid != rec.p_left + z)
            throw ParseError("layout record disagrees with separator length " + std::to_string(z));
        max_label = std::max(max_label, rec.label);
    }
    if (records.front().p_left != 1)
        throw ParseError("layout must start at position 1");
    VertexOrdering ordering;
    ordering.rank_of_label.assign(static_cast<std::size_t>(max_label), 0);
    for (Int v = 0; v < n; ++v) {
        const Int label = records[static_cast<std::size_t>(v)].label;
        if (ordering.rank_of_label[static_cast<std::size_t>(label - 1)] != 0)
            throw ParseError("duplicate label " + std::to_string(label) + " in layout");
        ordering.label_of_rank.push_back(label);
        ordering.rank_of_label[static_cast<std::size_t>(label - 1)] = v + 1;
    }
    return EncodingLayout(z, std::move(records), std::move(ordering));
}

void write_layout(std::ostream& out, const EncodingLayout& layout) {
    for (const auto& rec : layout.records())
        out << rec.label << " " << rec.p_left << " " << rec.p_mid << " " << rec.p_right << " "
            << rec.q_left << " " << rec.q_mid << " " << rec.q_right << "\n";
}

void write_instance_dir(const fs::path& dir, const ComposedInstance& inst) {
    fs::create_directories(dir);
    write_permutation_file(dir / "pattern.txt", inst.sigma);
    write_permutation_file(dir / "text.txt", inst.pi);
    {
        auto out = open_output(dir / "layout.txt");
        write_layout(out, inst.layout_text);
    }
    auto meta = open_output(dir / "meta.txt");
    meta << "l=" << inst.clique_size() << " z=" << inst.z << " t=" << inst.input_count() << "\n";
    for (std::size_t i = 0; i < inst.input_ranges.size(); ++i)
        meta << "range " << i + 1 << " " << inst.input_ranges[i].first << " "
             << inst.input_ranges[i].second << "\n";
}

ComposedInstance read_instance_dir(const fs::path& dir) {
    auto meta_in = open_input(dir / "meta.txt");
    const std::vector<std::string> tokens = tokenize(meta_in);
    Int l = -1, z = -1, t = -1;
    std::vector<std::pair<Int, Int>> ranges;
    std::size_t i = 0;
    for (const std::string key : {"l=", "z=", "t="}) {
        if (i >= tokens.size() || tokens[i].rfind(key, 0) != 0)
            throw ParseError("meta.txt must start with \"l=<l> z=<z> t=<t>\"");
        const Int value = parse_int(tokens[i].substr(2), key);
        if (key[0] == 'l')
            l = value;
        else if (key[0] == 'z')
            z = value;
        else
            t = value;
        ++i;
    }
    while (i < tokens.size()) {
        if (tokens[i] != "range" || i + 3 >= tokens.size())
            throw ParseError("malformed range line in meta.txt");
        const Int index = parse_int(tokens[i + 1], "range index");
        if (index != static_cast<Int>(ranges.size()) + 1)
            throw ParseError("range lines must be numbered consecutively");
        ranges.emplace_back(parse_int(tokens[i + 2], "range start"),
                            parse_int(tokens[i + 3], "range end"));
        i += 4;
    }
    if (l < 1 || z < 1 || t != static_cast<Int>(ranges.size()))
        throw ParseError("meta.txt is inconsistent");

    ComposedInstance inst;
    inst.z = z;
    inst.input_ranges = std::move(ranges);
    inst.sigma = read_permutation_file(dir / "pattern.txt");
    inst.pi = read_permutation_file(dir / "text.txt");
    {
        auto in = open_input(dir / "layout.txt");
        inst.layout_text = read_layout(in, z);
    }
    inst.layout_pattern = layout(Graph::complete(l), z);
    if (inst.sigma.size() != inst.layout_pattern.length())
        throw ParseError("pattern.txt length disagrees with l and z");
    if (inst.pi.size() != inst.layout_text.length())
        throw ParseError("text.txt length disagrees with layout.txt");
    return inst;
}

} // namespace ppm::io
