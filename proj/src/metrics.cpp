#include "strongcolor/metrics.hpp"

#include <algorithm>
#include <limits>

namespace strongcolor {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

} // namespace

Distances bfs_distances(const MultiGraph& g, const Anchor& anchor)
{
    Distances dist(g.vertex_count(), kUnseen);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());

    auto seed = [&](VertexId v) {
        if (v.index >= g.vertex_count())
            throw GraphError("bfs_distances: anchor vertex out of range");
        if (dist[v.index] == kUnseen) {
            dist[v.index] = 0;
            queue.push_back(v);
        }
    };
    if (const auto* v = std::get_if<VertexId>(&anchor))
        seed(*v);
    else
        for (VertexId v : std::get<CycleDescriptor>(anchor).vertices)
            seed(v);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId x = queue[head];
        for (VertexId y : g.neighbours(x)) {
            if (dist[y.index] == kUnseen) {
                dist[y.index] = dist[x.index] + 1;
                queue.push_back(y);
            }
        }
    }
    if (queue.size() != g.vertex_count())
        throw GraphError("bfs_distances: graph is not connected to the anchor");
    return dist;
}

EdgeOrder compatible_order(const MultiGraph& g, const Anchor& anchor)
{
    const auto dist = bfs_distances(g, anchor);
    const auto m = g.edge_count();
    std::uint32_t top = 0;
    std::vector<std::uint32_t> cls(m);
    for (std::size_t i = 0; i < m; ++i) {
        cls[i] = edge_distance_class(g, dist, EdgeId(i));
        top = std::max(top, cls[i]);
    }
    // Counting sort, farthest class first; stable in edge id.
    std::vector<std::size_t> start(top + 2, 0);
    for (auto c : cls)
        ++start[top - c + 1];
    for (std::size_t k = 1; k < start.size(); ++k)
        start[k] += start[k - 1];
    EdgeOrder order(m);
    for (std::size_t i = 0; i < m; ++i)
        order[start[top - cls[i]]++] = EdgeId(i);
    return order;
}

std::optional<CycleDescriptor> find_shortest_cycle(const MultiGraph& g,
                                                   std::optional<std::size_t> max_length)
{
    if (max_length && *max_length == 0)
        return std::nullopt;
    if (auto loop = g.find_loop()) {
        VertexId v = g.endpoints(*loop).u;
        return CycleDescriptor{{v}, {*loop}};
    }
    if (max_length && *max_length < 2)
        return std::nullopt;
    if (auto pair = g.find_parallel_pair()) {
        const auto& ep = g.endpoints(pair->first);
        return CycleDescriptor{{ep.u, ep.v}, {pair->first, pair->second}};
    }

    // Simple graph from here on. BFS from every vertex; a non-tree edge (x, y)
    // closes a walk of length d(x) + d(y) + 1. The minimum over all sources is
    // the girth, and a minimising walk is necessarily a simple cycle.
    const auto n = g.vertex_count();
    const std::uint32_t depth_cap =
        max_length ? static_cast<std::uint32_t>(*max_length / 2) : kUnseen;
    std::size_t best = max_length ? *max_length + 1 : std::numeric_limits<std::size_t>::max();
    std::optional<std::pair<VertexId, EdgeId>> best_at;

    std::vector<std::uint32_t> dist(n, kUnseen);
    std::vector<EdgeId> parent(n);
    std::vector<VertexId> queue;

    auto run = [&](VertexId s, auto&& on_close) {
        for (VertexId v : queue)
            dist[v.index] = kUnseen;
        queue.clear();
        dist[s.index] = 0;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId x = queue[head];
            const auto dx = dist[x.index];
            if (2 * static_cast<std::size_t>(dx) + 1 >= best)
                break;
            for (EdgeId e : g.incident(x)) {
                if (x != s && e == parent[x.index])
                    continue;
                VertexId y = g.other_end(e, x);
                if (dist[y.index] == kUnseen) {
                    if (dx + 1 > depth_cap)
                        continue;
                    dist[y.index] = dx + 1;
                    parent[y.index] = e;
                    queue.push_back(y);
                } else {
                    on_close(x, y, e);
                }
            }
        }
    };

    for (std::size_t s = 0; s < n && best > 3; ++s) {
        run(VertexId(s), [&](VertexId x, VertexId y, EdgeId e) {
            std::size_t len = std::size_t(dist[x.index]) + dist[y.index] + 1;
            if (len < best) {
                best = len;
                best_at = std::pair{VertexId(s), e};
            }
        });
    }
    if (!best_at)
        return std::nullopt;

    // Rebuild the BFS tree at the winning source and walk both branches back.
    const auto [s, closing] = *best_at;
    best = std::numeric_limits<std::size_t>::max();
    run(s, [](VertexId, VertexId, EdgeId) {});
    const auto& ep = g.endpoints(closing);
    auto path_to_root = [&](VertexId v) {
        std::vector<std::pair<VertexId, EdgeId>> path;
        while (v != s) {
            EdgeId e = parent[v.index];
            path.emplace_back(v, e);
            v = g.other_end(e, v);
        }
        return path;
    };
    auto left = path_to_root(ep.u);
    auto right = path_to_root(ep.v);

    CycleDescriptor c;
    c.vertices.push_back(s);
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        c.edges.push_back(it->second);
        c.vertices.push_back(it->first);
    }
    c.edges.push_back(closing);
    for (const auto& [v, e] : right) {
        c.vertices.push_back(v);
        c.edges.push_back(e);
    }
    return c;
}

std::optional<std::size_t> girth(const MultiGraph& g)
{
    if (auto c = find_shortest_cycle(g))
        return c->length();
    return std::nullopt;
}

bool is_valid_cycle(const MultiGraph& g, const CycleDescriptor& c)
{
    const auto k = c.length();
    if (k == 0 || c.vertices.size() != k)
        return false;
    std::vector<VertexId> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (c.edges[i].index >= g.edge_count())
            return false;
        const auto& ep = g.endpoints(c.edges[i]);
        VertexId a = c.vertices[i];
        VertexId b = c.vertices[(i + 1) % k];
        if (!((ep.u == a && ep.v == b) || (ep.u == b && ep.v == a)))
            return false;
    }
    return true;
}

} // namespace strongcolor
