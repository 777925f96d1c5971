// sec: generate, inspect, color, and verify strong edge colorings.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strongcolor/gen.hpp"
#include "strongcolor/graph_io.hpp"
#include "strongcolor/metrics.hpp"
#include "strongcolor/oracle.hpp"
#include "strongcolor/solver.hpp"

using namespace strongcolor;

namespace {

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spill(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

MultiGraph load(const std::string& path)
{
    try {
        return parse_graph(slurp(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<std::size_t> parse_sizes(const std::string& csv)
{
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');)
        out.push_back(std::stoul(item));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong edge coloring for multigraphs of maximum degree 4"};
    app.require_subcommand(1);

    std::string kind;
    GenSpec spec;
    std::size_t min_girth = 0;
    auto* gen = app.add_subcommand("gen", "Write a generated graph to stdout");
    gen->add_option("kind", kind, "erdos_nesetril_5 | star_neighborhood | random_max4 | random_4regular")
        ->required();
    gen->add_option("--n", spec.n, "Vertex count");
    gen->add_option("--m", spec.m, "Edge count (random_max4)");
    gen->add_option("--seed", spec.seed, "Random seed");
    gen->add_option("--min-girth", min_girth, "Minimum girth (random_4regular)");
    gen->add_flag("--loops", spec.allow_loops, "Allow loops");
    gen->add_flag("--parallel", spec.allow_parallel, "Allow parallel edges");

    std::string graph_path;
    auto* stats = app.add_subcommand("stats", "Print basic graph metrics");
    stats->add_option("graph", graph_path)->required();

    std::string out_path;
    auto* color = app.add_subcommand("color", "Color a graph with at most 22 colors");
    color->add_option("graph", graph_path, "Graph file, or - for stdin")->required();
    color->add_option("--out", out_path, "Write the coloring here");

    std::string coloring_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("coloring", coloring_path)->required();

    int ub = 22;
    auto* exact = app.add_subcommand("exact", "Strong chromatic index of a small graph");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("--ub", ub, "Upper bound on the number of colors");
    exact->add_option("--out", out_path, "Write an optimal coloring here");

    std::string sizes = "1000,10000,100000";
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Time the solver on random graphs");
    bench->add_option("--sizes", sizes, "Comma-separated vertex counts");
    bench->add_option("--seed", bench_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto k = parse_gen_kind(kind);
            if (!k)
                throw std::runtime_error("unknown kind: " + kind);
            spec.kind = *k;
            if (min_girth)
                spec.min_girth = min_girth;
            std::cout << emit_graph(generate(spec).graph);
        } else if (*stats) {
            auto g = load(graph_path);
            std::size_t widest = 0;
            for (std::size_t i = 0; i < g.edge_count(); ++i)
                widest = std::max(widest, g.conflict_set(EdgeId(i)).size());
            auto gi = girth(g);
            std::cout << "n=" << g.vertex_count() << "\n"
                      << "m=" << g.edge_count() << "\n"
                      << "max_degree=" << g.max_degree() << "\n"
                      << "min_degree=" << g.min_degree() << "\n"
                      << "loops=" << (g.find_loop() ? "yes" : "no") << "\n"
                      << "parallel=" << (g.find_parallel_pair() ? "yes" : "no") << "\n"
                      << "girth=" << (gi ? std::to_string(*gi) : "none") << "\n"
                      << "max_conflict_set=" << widest << "\n";
        } else if (*color) {
            auto g = load(graph_path);
            auto result = solve(g);
            const auto& rep = result.report;
            for (std::size_t i = 0; i < rep.components.size(); ++i) {
                const auto& c = rep.components[i];
                std::cout << "component " << i << ": strategy=" << to_string(c.strategy)
                          << " vertices=" << c.vertex_count << " edges=" << c.edge_count
                          << " colors=" << c.colors_used;
                if (!c.branch.empty())
                    std::cout << " branch=" << c.branch;
                std::cout << "\n";
            }
            std::cout << "colors_used=" << rep.colors_used << "\n"
                      << "FALLBACK=" << rep.fallback_invocations << "\n";
            if (!out_path.empty())
                spill(out_path, emit_coloring(result.coloring));
        } else if (*verify_cmd) {
            auto g = load(graph_path);
            auto col = parse_coloring(slurp(coloring_path), g.edge_count());
            auto bad = verify(g, col);
            for (const auto& v : bad)
                std::cout << "conflict: edges " << v.first.index << " and " << v.second.index
                          << " share color " << v.color << "\n";
            auto missing = col.uncolored();
            for (EdgeId e : missing)
                std::cout << "uncolored: edge " << e.index << "\n";
            if (!bad.empty() || !missing.empty())
                return 1;
            std::cout << "ok colors=" << col.colors_used() << "\n";
        } else if (*exact) {
            auto g = load(graph_path);
            auto r = exact_strong_index(g, ub);
            std::cout << r.chi_s << "\n";
            if (!out_path.empty())
                spill(out_path, emit_coloring(r.witness));
        } else if (*bench) {
            std::cout << "n,m,millis,colors\n";
            for (std::size_t n : parse_sizes(sizes)) {
                auto g = random_max4(n, n * 19 / 10, bench_seed + n);
                auto t0 = std::chrono::steady_clock::now();
                auto result = solve(g);
                auto t1 = std::chrono::steady_clock::now();
                auto ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                std::cout << n << "," << g.edge_count() << "," << static_cast<long long>(ms + 0.5)
                          << "," << result.report.colors_used << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "sec: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
