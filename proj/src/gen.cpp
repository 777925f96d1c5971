#include "strongcolor/gen.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "strongcolor/metrics.hpp"

namespace strongcolor {

namespace {

// Modulo draw instead of std::uniform_int_distribution so outputs do not
// depend on the standard library implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t bound)
{
    return static_cast<std::size_t>(rng() % bound);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[draw(rng, i)]);
}

MultiGraph from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

} // namespace

std::string to_string(GenKind k)
{
    switch (k) {
    case GenKind::erdos_nesetril_5: return "erdos_nesetril_5";
    case GenKind::star_neighborhood: return "star_neighborhood";
    case GenKind::random_max4: return "random_max4";
    case GenKind::random_4regular: return "random_4regular";
    }
    return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view name)
{
    for (auto k : {GenKind::erdos_nesetril_5, GenKind::star_neighborhood, GenKind::random_max4,
                   GenKind::random_4regular})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

MultiGraph erdos_nesetril_5()
{
    GraphBuilder b(10);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                b.add_edge(2 * i + j, 2 * ((i + 1) % 5) + k);
    return std::move(b).build();
}

MultiGraph star_neighborhood()
{
    GraphBuilder b(26);
    b.add_edge(0, 1);
    std::size_t next = 2;
    std::vector<std::size_t> middle;
    for (std::size_t end : {0, 1})
        for (int i = 0; i < 3; ++i) {
            b.add_edge(end, next);
            middle.push_back(next++);
        }
    for (std::size_t w : middle)
        for (int i = 0; i < 3; ++i)
            b.add_edge(w, next++);
    return std::move(b).build();
}

MultiGraph random_max4(std::size_t n, std::size_t m, std::uint64_t seed, bool allow_loops,
                       bool allow_parallel)
{
    if (m > 2 * n)
        throw std::invalid_argument("random_max4: m exceeds 2n");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint32_t>> adj(n);
    std::vector<int> deg(n, 0);
    std::vector<std::uint32_t> open(n), slot(n);
    for (std::uint32_t i = 0; i < n; ++i)
        open[i] = slot[i] = i;
    auto touch = [&](std::uint32_t x, int by) {
        deg[x] += by;
        if (deg[x] == 4) {
            slot[open.back()] = slot[x];
            std::swap(open[slot[x]], open.back());
            open.pop_back();
        }
    };

    GraphBuilder b(n);
    std::size_t failures = 0;
    const std::size_t max_failures = 64 * m + 1000;
    for (std::size_t placed = 0; placed < m;) {
        if (open.empty() || failures > max_failures)
            throw GraphError("random_max4: could not place " + std::to_string(m) + " edges");
        auto u = open[draw(rng, open.size())];
        auto v = open[draw(rng, open.size())];
        bool ok;
        if (u == v)
            ok = allow_loops && deg[u] <= 2;
        else
            ok = allow_parallel || std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
        if (!ok) {
            ++failures;
            continue;
        }
        b.add_edge(u, v);
        adj[u].push_back(v);
        if (u != v) {
            adj[v].push_back(u);
            touch(u, 1);
            touch(v, 1);
        } else {
            touch(u, 2);
        }
        ++placed;
    }
    return std::move(b).build();
}

Generated random_4regular(std::size_t n, std::uint64_t seed, std::size_t min_girth,
                          bool allow_loops, bool allow_parallel)
{
    if (n < 5)
        throw std::invalid_argument("random_4regular: n must be at least 5");
    if (min_girth < 3 || min_girth > 6)
        throw std::invalid_argument("random_4regular: min_girth must be in 3..6");
    std::mt19937_64 rng(seed);
    // Vertices within this distance of u may not be joined to it.
    const std::size_t reach = min_girth - 2;

    std::vector<std::vector<std::uint32_t>> adj(n);
    std::vector<std::size_t> seen(n, 0), dist(n, 0);
    std::size_t stamp = 0;
    std::vector<std::uint32_t> queue;

    for (std::size_t attempt = 1; attempt <= kRejectionBudget; ++attempt) {
        for (auto& a : adj)
            a.clear();
        std::vector<std::uint32_t> points;
        points.reserve(4 * n);
        for (std::uint32_t v = 0; v < n; ++v)
            points.insert(points.end(), 4, v);
        shuffle(points, rng);

        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        bool stuck = false;
        std::vector<std::size_t> candidates;
        while (!points.empty()) {
            const auto u = points.back();
            points.pop_back();

            // Mark everything within `reach` of u.
            ++stamp;
            queue.assign(1, u);
            seen[u] = stamp;
            dist[u] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto x = queue[head];
                if (dist[x] == reach)
                    continue;
                for (auto y : adj[x])
                    if (seen[y] != stamp) {
                        seen[y] = stamp;
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            candidates.clear();
            for (std::size_t i = 0; i < points.size(); ++i) {
                auto v = points[i];
                bool ok = seen[v] != stamp || (v == u && allow_loops) ||
                          (v != u && dist[v] == 1 && allow_parallel);
                if (ok)
                    candidates.push_back(i);
            }
            if (candidates.empty()) {
                stuck = true;
                break;
            }
            const auto i = candidates[draw(rng, candidates.size())];
            const auto v = points[i];
            points[i] = points.back();
            points.pop_back();
            edges.emplace_back(std::min(u, v), std::max(u, v));
            adj[u].push_back(v);
            if (u != v)
                adj[v].push_back(u);
        }
        if (stuck)
            continue;

        std::sort(edges.begin(), edges.end());
        GraphBuilder b(n);
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        auto g = std::move(b).build();
        auto gi = girth(g);
        return {std::move(g), gi};
    }
    throw RejectionBudgetExhausted(kRejectionBudget,
                                   "random_4regular: no graph with n=" + std::to_string(n) +
                                       " and girth >= " + std::to_string(min_girth) + " after " +
                                       std::to_string(kRejectionBudget) + " attempts");
}

Generated generate(const GenSpec& spec)
{
    switch (spec.kind) {
    case GenKind::erdos_nesetril_5: {
        auto g = erdos_nesetril_5();
        auto gi = girth(g);
        return {std::move(g), gi};
    }
    case GenKind::star_neighborhood: {
        auto g = star_neighborhood();
        auto gi = girth(g);
        return {std::move(g), gi};
    }
    case GenKind::random_max4: {
        auto g = random_max4(spec.n, spec.m, spec.seed, spec.allow_loops, spec.allow_parallel);
        auto gi = girth(g);
        return {std::move(g), gi};
    }
    case GenKind::random_4regular:
        return random_4regular(spec.n, spec.seed, spec.min_girth.value_or(3), spec.allow_loops,
                               spec.allow_parallel);
    }
    throw std::invalid_argument("generate: unknown kind");
}

MultiGraph cycle_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return from_pairs(n, e);
}

MultiGraph path_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_pairs(n, e);
}

MultiGraph complete_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return from_pairs(n, e);
}

MultiGraph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return from_pairs(a + b, e);
}

MultiGraph petersen()
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return from_pairs(10, e);
}

MultiGraph robertson()
{
    constexpr std::array<std::size_t, 19> jumps = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8,
                                                   4, 5, 7, 8, 4, 8, 4, 8, 4};
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < 19; ++i)
        e.emplace_back(i, (i + 1) % 19);
    for (std::size_t i = 0; i < 19; ++i)
        e.emplace_back(i, (i + jumps[i]) % 19);
    return from_pairs(19, e);
}

MultiGraph cage_4_6()
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t line = 0; line < 13; ++line)
        for (std::size_t shift : {0, 1, 3, 9})
            e.emplace_back((line + shift) % 13, 13 + line);
    return from_pairs(26, e);
}

} // namespace strongcolor
