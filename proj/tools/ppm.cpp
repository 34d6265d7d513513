#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ppm/io.hpp"
#include "ppm/matcher.hpp"
#include "ppm/oracle.hpp"
#include "ppm/reduction.hpp"

namespace {

using namespace ppm;

// Exit codes: 0 = YES/success, 1 = NO, 2 = usage or input error,
// 3 = node budget exhausted.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

constexpr std::uint64_t kDefaultBudget = 100000000; // 10^8 search nodes

Permutation parse_pattern_string(const std::string& text) {
    std::istringstream in(text);
    return io::read_permutation(in);
}

int run_encode(const std::string& graph_path, Int z, const std::string& out_path) {
    const Graph g = io::read_graph_file(graph_path);
    const auto [pi, led] = encode(g, z);
    io::write_permutation_file(out_path, pi);
    {
        std::ofstream out(out_path + ".layout");
        if (!out)
            throw ParseError("cannot open " + out_path + ".layout for writing");
        io::write_layout(out, led);
    }
    std::cout << pi.size() << "\n";
    return kYes;
}

int run_match(const std::string& pattern_path, const std::string& text_path,
              bool print_certificate, std::uint64_t budget) {
    const Permutation sigma = io::read_permutation_file(pattern_path);
    const Permutation pi = io::read_permutation_file(text_path);
    if (sigma.size() < 1)
        throw ParseError("pattern must be nonempty");
    const MatchResult result = contains_pattern(sigma, pi, budget);
    std::cerr << "nodes=" << result.nodes_explored << "\n";
    if (!result.found)
        return kNo;
    if (print_certificate) {
        const Certificate& phi = *result.certificate;
        for (Int x = 1; x <= phi.size(); ++x)
            std::cout << (x > 1 ? " " : "") << phi(x);
        std::cout << "\n";
    }
    return kYes;
}

int run_reduce(const std::string& graph_path, Int l, const std::string& out_dir) {
    if (l < 1)
        throw ParseError("clique size must be positive");
    const Graph g = io::read_graph_file(graph_path);
    const ComposedInstance inst = reduce_clique({l, g});
    io::write_instance_dir(out_dir, inst);
    std::cout << "z=" << inst.z << " sigma=" << inst.sigma.size() << " pi=" << inst.pi.size()
              << "\n";
    return kYes;
}

int run_compose(const std::vector<std::string>& graph_paths, Int l, const std::string& out_dir) {
    if (l < 1)
        throw ParseError("clique size must be positive");
    std::vector<CliqueInstance> instances;
    instances.reserve(graph_paths.size());
    for (const std::string& path : graph_paths)
        instances.push_back({l, io::read_graph_file(path)});
    const ComposedInstance inst = compose(instances);
    io::write_instance_dir(out_dir, inst);
    std::cout << "z=" << inst.z << " sigma=" << inst.sigma.size() << " pi=" << inst.pi.size()
              << "\n";
    return kYes;
}

int run_extract(const std::string& dir, std::uint64_t budget) {
    const ComposedInstance inst = io::read_instance_dir(dir);
    const MatchResult result = contains_pattern(inst.sigma, inst.pi, budget);
    if (!result.found)
        return kNo;
    const std::vector<Int> clique = extract_clique(inst, *result.certificate);
    std::vector<Int> ranks;
    ranks.reserve(clique.size());
    for (Int label : clique)
        ranks.push_back(inst.layout_text.ordering().rank_of(label));
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        for (std::size_t j = i + 1; j < ranks.size(); ++j)
            if (!edge_indicator(inst.pi, inst.layout_text, ranks[i], ranks[j]))
                throw MalformedCertificate("extracted set is not a clique of the text graph");
    for (std::size_t i = 0; i < clique.size(); ++i)
        std::cout << (i > 0 ? " " : "") << clique[i];
    std::cout << "\n";
    if (inst.input_count() > 1)
        for (std::size_t i = 0; i < inst.input_ranges.size(); ++i)
            if (ranks.front() >= inst.input_ranges[i].first &&
                ranks.back() <= inst.input_ranges[i].second) {
                std::cout << "input " << i + 1 << "\n";
                break;
            }
    return kYes;
}

Graph random_stripped_graph(std::mt19937_64& rng, Int max_n) {
    // Erdos-Renyi with edge probability 1/2, isolated vertices stripped;
    // empty results are redrawn so every sample is encodable.
    while (true) {
        const Int n = 2 + static_cast<Int>(rng() % static_cast<std::uint64_t>(max_n - 1));
        std::vector<std::pair<Int, Int>> edges;
        for (Int u = 1; u <= n; ++u)
            for (Int v = u + 1; v <= n; ++v)
                if (rng() & 1)
                    edges.emplace_back(u, v);
        const Graph g = strip_isolated(Graph(n, std::move(edges)));
        if (g.vertex_count() > 0)
            return g;
    }
}

struct LemmaReport {
    Int checked = 0;
    Int yes = 0;
    Int no = 0;
    Int exhausted = 0;
    Int disagreements = 0;
};

void check_lemma_instance(const Graph& g, Int l, std::uint64_t budget, LemmaReport& report) {
    ++report.checked;
    const bool expected = has_clique(g, l).has_value();
    const ComposedInstance inst = reduce_clique({l, g});
    bool matched = false;
    try {
        const MatchResult result = contains_pattern(inst.sigma, inst.pi, budget);
        matched = result.found;
        if (result.found) {
            const std::vector<Int> clique = extract_clique(inst, *result.certificate);
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    if (!g.adjacent(clique[i], clique[j])) {
                        ++report.disagreements;
                        return;
                    }
        }
    } catch (const BudgetExhausted&) {
        ++report.exhausted; // exhaustion is not a verdict
        return;
    }
    (matched ? report.yes : report.no)++;
    if (matched != expected)
        ++report.disagreements;
}

int run_verify_lemma(Int max_n, Int l, Int samples, std::uint64_t seed, std::uint64_t budget,
                     bool exhaustive) {
    if (max_n < 2)
        throw ParseError("--max-n must be at least 2");
    if (l < 1)
        throw ParseError("--l must be positive");
    LemmaReport report;
    if (exhaustive) {
        if (max_n > 5)
            throw ParseError("exhaustive mode enumerates all graphs; --max-n must be <= 5");
        for (Int n = 2; n <= max_n; ++n) {
            std::vector<std::pair<Int, Int>> pairs;
            for (Int u = 1; u <= n; ++u)
                for (Int v = u + 1; v <= n; ++v)
                    pairs.emplace_back(u, v);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                std::vector<std::pair<Int, Int>> edges;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    if (mask >> b & 1)
                        edges.push_back(pairs[b]);
                const Graph g = strip_isolated(Graph(n, std::move(edges)));
                if (g.vertex_count() > 0)
                    check_lemma_instance(g, l, budget, report);
            }
        }
    } else {
        if (samples < 1)
            throw ParseError("--samples must be positive");
        std::mt19937_64 rng(seed);
        for (Int s = 0; s < samples; ++s)
            check_lemma_instance(random_stripped_graph(rng, max_n), l, budget, report);
    }
    std::cout << "checked=" << report.checked << " yes=" << report.yes << " no=" << report.no
              << " exhausted=" << report.exhausted << " disagreements=" << report.disagreements
              << "\n";
    return report.disagreements == 0 ? kYes : kNo;
}

int run_count_avoiders(const std::string& pattern, Int n) {
    const Permutation sigma = parse_pattern_string(pattern);
    if (sigma.size() < 1)
        throw ParseError("pattern must be nonempty");
    if (n < 1)
        throw ParseError("--n must be positive");
    std::cout << avoiders_count(sigma, n) << "\n";
    return kYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation pattern matching toolkit: graph encodings, the clique\n"
                 "reduction and its OR-composition, exact matching, and brute-force\n"
                 "verification harnesses."};
    app.require_subcommand(1);

    std::string graph_path, pattern_path, text_path, out_path, dir, pattern_string;
    std::vector<std::string> graph_paths;
    Int z = 1, l = 1, n = 1, max_n = 4, samples = 50;
    std::uint64_t budget = kDefaultBudget, seed = 1;
    bool print_certificate = false, exhaustive = false;

    auto* cmd_encode = app.add_subcommand("encode", "Encode a graph as a permutation");
    cmd_encode->add_option("graph", graph_path, "graph file")->required();
    cmd_encode->add_option("--z", z, "separator run length")->required();
    cmd_encode
        ->add_option("--out", out_path, "output permutation file; layout goes to <out>.layout")
        ->required();

    auto* cmd_match = app.add_subcommand("match", "Decide whether a pattern occurs in a text");
    cmd_match->add_option("pattern", pattern_path, "pattern permutation file")->required();
    cmd_match->add_option("text", text_path, "text permutation file")->required();
    cmd_match->add_flag("--certificate", print_certificate, "print the witness positions");
    cmd_match->add_option("--budget", budget, "search node limit");

    auto* cmd_reduce = app.add_subcommand("reduce", "Encode a clique question as an instance");
    cmd_reduce->add_option("graph", graph_path, "graph file")->required();
    cmd_reduce->add_option("--l", l, "clique size")->required();
    cmd_reduce->add_option("--out", out_path, "output instance directory")->required();

    auto* cmd_compose = app.add_subcommand("compose", "OR-compose several clique instances");
    cmd_compose->add_option("--l", l, "clique size")->required();
    cmd_compose->add_option("--out", out_path, "output instance directory")->required();
    cmd_compose->add_option("graphs", graph_paths, "graph files")->required();

    auto* cmd_extract = app.add_subcommand("extract", "Match an instance and extract the clique");
    cmd_extract->add_option("instance", dir, "instance directory")->required();
    cmd_extract->add_option("--budget", budget, "search node limit");

    auto* cmd_verify = app.add_subcommand("verify-lemma",
                                          "Check matcher/clique-oracle agreement on reductions");
    cmd_verify->add_option("--max-n", max_n, "largest graph size")->required();
    cmd_verify->add_option("--l", l, "clique size")->required();
    cmd_verify->add_option("--samples", samples, "number of random graphs");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--budget", budget, "search node limit");
    cmd_verify->add_flag("--exhaustive", exhaustive, "enumerate all graphs up to --max-n");

    auto* cmd_avoiders = app.add_subcommand("count-avoiders",
                                            "Count permutations of [n] avoiding a pattern");
    cmd_avoiders->add_option("--pattern", pattern_string, "pattern, e.g. \"2 3 1\"")->required();
    cmd_avoiders->add_option("--n", n, "permutation size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (cmd_encode->parsed())
            return run_encode(graph_path, z, out_path);
        if (cmd_match->parsed())
            return run_match(pattern_path, text_path, print_certificate, budget);
        if (cmd_reduce->parsed())
            return run_reduce(graph_path, l, out_path);
        if (cmd_compose->parsed())
            return run_compose(graph_paths, l, out_path);
        if (cmd_extract->parsed())
            return run_extract(dir, budget);
        if (cmd_verify->parsed())
            return run_verify_lemma(max_n, l, samples, seed, budget, exhaustive);
        if (cmd_avoiders->parsed())
            return run_count_avoiders(pattern_string, n);
    } catch (const BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
