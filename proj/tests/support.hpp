#pragma once

// Shared test helpers: the random corpus, fixture loading, and brute-force
// oracles that do not reuse any library algorithm.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strongcolor/gen.hpp"
#include "strongcolor/graph_io.hpp"
#include "strongcolor/metrics.hpp"
#include "strongcolor/multigraph.hpp"

namespace testing {

using namespace strongcolor;

struct NamedGraph {
    std::string name;
    MultiGraph graph;
};

inline std::string fixture_path(const std::string& file)
{
    return std::string(SEC_FIXTURE_DIR) + "/" + file;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline MultiGraph load_fixture(const std::string& file)
{
    return parse_graph(read_file(fixture_path(file)));
}

inline std::uint64_t fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// The seeded Δ≤4 corpus: sparse and dense random graphs, loops and
/// parallel edges, and 4-regular graphs of girth 3, 4 and 5.
inline std::vector<NamedGraph> random_corpus(std::size_t per_family = 150,
                                             std::uint64_t base_seed = 1)
{
    std::vector<NamedGraph> out;
    std::mt19937_64 rng(base_seed);
    auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
    auto add = [&](std::string name, MultiGraph g) { out.push_back({std::move(name), std::move(g)}); };

    for (std::size_t i = 0; i < per_family; ++i) {
        std::uint64_t s = base_seed * 1000003 + i;
        {
            auto n = pick(6, 200);
            auto m = pick(n / 2, n * 19 / 10);
            add("max4 n=" + std::to_string(n) + " seed=" + std::to_string(s),
                random_max4(n, m, s));
        }
        {
            auto n = pick(4, 200);
            auto m = pick(n / 2, n * 18 / 10);
            add("max4+multi n=" + std::to_string(n) + " seed=" + std::to_string(s),
                random_max4(n, m, s, true, true));
        }
        for (std::size_t girth : {3, 4, 5}) {
            auto n = girth == 5 ? pick(40, 200) : pick(girth == 4 ? 10 : 5, 200);
            add("4reg g>=" + std::to_string(girth) + " n=" + std::to_string(n) +
                    " seed=" + std::to_string(s),
                random_4regular(n, s, girth).graph);
        }
        {
            auto n = pick(5, 120);
            add("4reg+loops n=" + std::to_string(n) + " seed=" + std::to_string(s),
                random_4regular(n, s, 3, true, false).graph);
        }
        {
            auto n = pick(5, 120);
            add("4reg+parallel n=" + std::to_string(n) + " seed=" + std::to_string(s),
                random_4regular(n, s, 3, false, true).graph);
        }
    }
    return out;
}

/// A small random graph of maximum degree 4 for comparisons against the
/// brute-force oracles below. Some have loops and parallel edges.
inline MultiGraph small_random_graph(std::uint64_t seed, std::size_t max_n, std::size_t max_m = 64)
{
    const std::size_t n = 3 + seed % (max_n - 2);
    std::size_t m = std::min(max_m, 1 + (seed / 7) % (2 * n));
    for (;; --m) {
        try {
            return random_max4(n, m, seed, seed % 5 == 0, seed % 4 == 0);
        } catch (const GraphError&) {
        }
    }
}

// ---- brute-force oracles ----------------------------------------------------

/// Conflict set by enumerating walks e, f or e, h, f of edges that share
/// endpoints: f conflicts with e iff some edge path of at most three edges
/// starts at e and ends at f.
inline std::vector<EdgeId> naive_conflict_set(const MultiGraph& g, EdgeId e)
{
    const auto m = g.edge_count();
    auto touch = [&](EdgeId x, EdgeId y) {
        const auto& a = g.endpoints(x);
        const auto& b = g.endpoints(y);
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    };
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < m; ++j) {
        EdgeId f(j);
        if (f == e)
            continue;
        bool hit = touch(e, f);
        for (std::size_t h = 0; h < m && !hit; ++h) {
            EdgeId mid(h);
            if (mid != e && mid != f && touch(e, mid) && touch(mid, f))
                hit = true;
        }
        if (hit)
            out.push_back(f);
    }
    return out;
}

/// Girth by iterative deepening over simple cycles through each edge.
inline std::optional<std::size_t> naive_girth(const MultiGraph& g)
{
    const auto m = g.edge_count();
    for (std::size_t i = 0; i < m; ++i)
        if (g.endpoints(EdgeId(i)).is_loop())
            return 1;
    for (std::size_t length = 2; length <= g.vertex_count(); ++length) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto start = g.endpoints(EdgeId(i));
            std::vector<char> used(g.vertex_count(), 0);
            // Walk from start.v back to start.u in exactly length-1 further edges.
            std::function<bool(VertexId, std::size_t)> walk = [&](VertexId x, std::size_t left) {
                for (EdgeId f : g.incident(x)) {
                    if (f.index == i || g.endpoints(f).is_loop())
                        continue;
                    VertexId y = g.other_end(f, x);
                    if (left == 1) {
                        if (y == start.u)
                            return true;
                        continue;
                    }
                    if (used[y.index])
                        continue;
                    used[y.index] = 1;
                    bool found = walk(y, left - 1);
                    used[y.index] = 0;
                    if (found)
                        return true;
                }
                return false;
            };
            used[start.u.index] = used[start.v.index] = 1;
            if (walk(start.v, length - 1))
                return length;
        }
    }
    return std::nullopt;
}

/// Smallest k such that some assignment of colors 1..k is a strong coloring,
/// by trying every assignment. Only for tiny graphs.
inline int naive_strong_index(const MultiGraph& g)
{
    const auto m = g.edge_count();
    if (m == 0)
        return 0;
    std::vector<std::vector<EdgeId>> nb(m);
    for (std::size_t i = 0; i < m; ++i)
        nb[i] = naive_conflict_set(g, EdgeId(i));
    for (int k = 1;; ++k) {
        std::vector<int> c(m, 1);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                for (EdgeId f : nb[i])
                    if (c[i] == c[f.index])
                        ok = false;
            if (ok)
                return k;
            std::size_t pos = 0;
            while (pos < m && c[pos] == k)
                c[pos++] = 1;
            if (pos == m)
                break;
            ++c[pos];
        }
    }
}

/// Whether a family of small integer sets has distinct representatives, by
/// exhaustive search over choices with distinct colors.
inline bool naive_has_sdr(const std::vector<std::vector<int>>& sets)
{
    std::set<int> used;
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == sets.size())
            return true;
        for (int c : sets[i]) {
            if (used.count(c))
                continue;
            used.insert(c);
            bool ok = place(i + 1);
            used.erase(c);
            if (ok)
                return true;
        }
        return false;
    };
    return place(0);
}

// ---- hand-built girth-4 frames ----------------------------------------------

/// Shape of the two packs around the 4-cycle 0-1-2-3 (edges 0..3).
struct Girth4Shape {
    bool pack0_diagonal = false; // far ends of vertices 0 and 2 form a K2,2
    bool pack1_diagonal = false; // same for vertices 1 and 3
    int pack1_shared = 0;        // far ends shared between vertices 1 and 3 (0..2)
};

/// A connected 4-regular graph of girth 4 containing the frame described by
/// `shape`, completed at random with extra vertices. Returns nullopt if the
/// completion did not succeed for this seed.
inline std::optional<MultiGraph> girth4_fixture(const Girth4Shape& shape, std::uint64_t seed,
                                                std::size_t extra = 24)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    std::size_t next = 4;
    std::array<std::array<std::size_t, 2>, 4> far{};
    for (std::size_t v : {0, 2})
        far[v] = {next++, next++};
    far[1] = {next++, next++};
    far[3] = far[1];
    for (int i = shape.pack1_shared; i < 2; ++i)
        far[3][i] = next++;
    for (std::size_t v = 0; v < 4; ++v)
        for (std::size_t x : far[v])
            edges.emplace_back(v, x);
    auto join = [&](std::size_t p, std::size_t q) {
        for (std::size_t x : far[p])
            for (std::size_t y : far[q])
                edges.emplace_back(x, y);
    };
    if (shape.pack0_diagonal)
        join(0, 2);
    if (shape.pack1_diagonal)
        join(1, 3);

    const std::size_t n = next + extra;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::set<std::size_t>> adj(n);
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            adj[u].insert(v);
            adj[v].insert(u);
            ++deg[u];
            ++deg[v];
        }
        std::vector<std::size_t> points;
        for (std::size_t v = 0; v < n; ++v)
            for (int k = deg[v]; k < 4; ++k)
                points.push_back(v);
        if (points.size() % 2)
            return std::nullopt;
        auto out = edges;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            std::size_t u = points.back();
            points.pop_back();
            // Reject v at distance <= 2 from u, so no triangle or parallel edge appears.
            std::vector<std::size_t> ok;
            for (std::size_t i = 0; i < points.size(); ++i) {
                std::size_t v = points[i];
                bool close = v == u || adj[u].count(v);
                for (std::size_t w : adj[u])
                    close = close || adj[w].count(v);
                if (!close)
                    ok.push_back(i);
            }
            if (ok.empty()) {
                stuck = true;
                break;
            }
            std::size_t i = ok[rng() % ok.size()];
            std::size_t v = points[i];
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
            adj[u].insert(v);
            adj[v].insert(u);
            out.emplace_back(u, v);
        }
        if (stuck)
            continue;
        GraphBuilder b(n);
        for (auto [u, v] : out)
            b.add_edge(u, v);
        auto g = std::move(b).build();
        if (edge_components(g).size() == 1)
            return g;
    }
    return std::nullopt;
}

/// The cycle 0-1-2-3 of a girth4_fixture graph.
inline CycleDescriptor girth4_fixture_cycle()
{
    return {{VertexId(0), VertexId(1), VertexId(2), VertexId(3)},
            {EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)}};
}

} // namespace testing
