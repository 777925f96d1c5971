#include "strongcolor/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace strongcolor {

std::size_t MultiGraph::max_degree() const
{
    if (degree_.empty())
        return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

std::size_t MultiGraph::min_degree() const
{
    if (degree_.empty())
        return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

bool MultiGraph::is_regular(std::size_t d) const
{
    return std::all_of(degree_.begin(), degree_.end(), [d](auto x) { return x == d; });
}

std::vector<EdgeId> MultiGraph::conflict_set(EdgeId e) const
{
    std::vector<EdgeId> out;
    out.reserve(32);
    for_each_near(e, [&](EdgeId f) {
        if (f != e)
            out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MultiGraph::conflicts(EdgeId e, EdgeId f) const
{
    if (e == f)
        return false;
    bool hit = false;
    for_each_near(e, [&](EdgeId g) { hit = hit || g == f; });
    return hit;
}

std::optional<EdgeId> MultiGraph::find_loop() const
{
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].is_loop())
            return EdgeId(i);
    return std::nullopt;
}

std::optional<std::pair<EdgeId, EdgeId>> MultiGraph::find_parallel_pair() const
{
    // Loops are reported by find_loop; two loops at one vertex are not a pair.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& a = edges_[i];
        if (a.is_loop())
            continue;
        VertexId x = degree_[a.u.index] <= degree_[a.v.index] ? a.u : a.v;
        std::optional<EdgeId> best;
        for (EdgeId f : incident(x)) {
            if (f.index <= i)
                continue;
            const auto& b = edges_[f.index];
            bool same = (b.u == a.u && b.v == a.v) || (b.u == a.v && b.v == a.u);
            if (same && (!best || f < *best))
                best = f;
        }
        if (best)
            return std::pair{EdgeId(i), *best};
    }
    return std::nullopt;
}

GraphBuilder::GraphBuilder(std::size_t vertex_count)
{
    graph_.degree_.resize(vertex_count, 0);
}

void GraphBuilder::reserve_edges(std::size_t m)
{
    graph_.edges_.reserve(m);
}

VertexId GraphBuilder::add_vertex()
{
    graph_.degree_.push_back(0);
    return VertexId(graph_.degree_.size() - 1);
}

EdgeId GraphBuilder::add_edge(VertexId u, VertexId v)
{
    const auto n = graph_.vertex_count();
    if (u.index >= n || v.index >= n)
        throw GraphError("add_edge: vertex id out of range (" + std::to_string(u.index) + ", " +
                         std::to_string(v.index) + ") with " + std::to_string(n) + " vertices");
    EdgeId id(graph_.edges_.size());
    graph_.edges_.push_back({u, v});
    graph_.degree_[u.index] += 1;
    graph_.degree_[v.index] += 1;
    return id;
}

MultiGraph GraphBuilder::build() &&
{
    auto& g = graph_;
    const auto n = g.degree_.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& ep : g.edges_) {
        ++g.offsets_[ep.u.index + 1];
        if (!ep.is_loop())
            ++g.offsets_[ep.v.index + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adjacency_.resize(g.offsets_[n]);
    g.neighbours_.resize(g.offsets_[n]);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const auto& ep = g.edges_[i];
        g.neighbours_[fill[ep.u.index]] = ep.v;
        g.adjacency_[fill[ep.u.index]++] = EdgeId(i);
        if (ep.is_loop())
            continue;
        g.neighbours_[fill[ep.v.index]] = ep.u;
        g.adjacency_[fill[ep.v.index]++] = EdgeId(i);
    }
    return std::move(graph_);
}

namespace {

/// Membership bitmap with constant-time rank: how many members precede `i`.
class RankedBits {
public:
    explicit RankedBits(std::size_t size) : bits_((size + 63) / 64, 0), before_(bits_.size() + 1, 0) {}

    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }

    void finish()
    {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            before_[w + 1] = before_[w] + static_cast<std::uint32_t>(std::popcount(bits_[w]));
    }

    std::uint32_t rank(std::size_t i) const
    {
        const auto low = bits_[i / 64] & ((std::uint64_t{1} << (i % 64)) - 1);
        return before_[i / 64] + static_cast<std::uint32_t>(std::popcount(low));
    }

private:
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> before_;
};

} // namespace

std::vector<Component> edge_components(const MultiGraph& g)
{
    constexpr auto none = UINT32_MAX;
    struct Place {
        std::uint32_t comp = none;
        std::uint32_t local = 0;
    };
    const auto n = g.vertex_count();
    const auto m = g.edge_count();
    std::vector<Place> place(n);
    std::vector<std::size_t> vertices;
    std::vector<VertexId> queue;
    queue.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        if (place[s].comp != none || g.degree(VertexId(s)) == 0)
            continue;
        const auto comp = static_cast<std::uint32_t>(vertices.size());
        const auto first = queue.size();
        place[s].comp = comp;
        queue.push_back(VertexId(s));
        for (auto head = first; head < queue.size(); ++head) {
            for (VertexId y : g.neighbours(queue[head])) {
                if (place[y.index].comp == none) {
                    place[y.index].comp = comp;
                    queue.push_back(y);
                    g.prefetch(y);
                }
            }
        }
        vertices.push_back(queue.size() - first);
    }
    const auto count = vertices.size();
    std::vector<Component> out(count);
    if (count == 0)
        return out;

    // The largest component is copied by streaming over the parent's arrays;
    // since local ids keep the parent's order, a local id is just a rank.
    // Every local incidence list therefore stays sorted by edge id.
    const auto big = static_cast<std::uint32_t>(
        std::max_element(vertices.begin(), vertices.end()) - vertices.begin());
    RankedBits in_big(n), big_edge(m);
    for (std::size_t v = 0; v < n; ++v)
        if (place[v].comp == big)
            in_big.set(v);
    in_big.finish();
    for (std::size_t i = 0; i < m; ++i)
        if (in_big.test(g.edges_[i].u.index))
            big_edge.set(i);
    big_edge.finish();

    auto& main = out[big];
    auto& h = main.graph;
    main.vertex_map.reserve(vertices[big]);
    h.degree_.reserve(vertices[big]);
    h.offsets_.reserve(vertices[big] + 1);
    std::size_t half_edges = 0, degree_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_big.test(v))
            continue;
        main.vertex_map.push_back(VertexId(v));
        h.degree_.push_back(g.degree_[v]);
        degree_sum += g.degree_[v];
        half_edges += g.offsets_[v + 1] - g.offsets_[v];
        h.offsets_.push_back(static_cast<std::uint32_t>(half_edges));
    }
    main.edge_map.reserve(degree_sum / 2);
    h.edges_.reserve(degree_sum / 2);
    h.adjacency_.reserve(half_edges);
    h.neighbours_.reserve(half_edges);
    for (std::size_t i = 0; i < m; ++i) {
        if (!big_edge.test(i))
            continue;
        const auto& ep = g.edges_[i];
        main.edge_map.push_back(EdgeId(i));
        h.edges_.push_back({VertexId(in_big.rank(ep.u.index)), VertexId(in_big.rank(ep.v.index))});
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_big.test(v))
            continue;
        for (auto i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
            h.adjacency_.push_back(EdgeId(big_edge.rank(g.adjacency_[i].index)));
            h.neighbours_.push_back(VertexId(in_big.rank(g.neighbours_[i].index)));
        }
    }

    if (count == 1)
        return out;
    std::vector<GraphBuilder> builders;
    builders.reserve(count);
    for (std::size_t c = 0; c < count; ++c)
        builders.emplace_back(c == big ? 0 : vertices[c]);
    for (std::size_t v = 0; v < n; ++v) {
        const auto comp = place[v].comp;
        if (comp == none || comp == big)
            continue;
        place[v].local = static_cast<std::uint32_t>(out[comp].vertex_map.size());
        out[comp].vertex_map.push_back(VertexId(v));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (big_edge.test(i))
            continue;
        const auto& ep = g.edges_[i];
        const auto comp = place[ep.u.index].comp;
        builders[comp].add_edge(VertexId(place[ep.u.index].local), VertexId(place[ep.v.index].local));
        out[comp].edge_map.push_back(EdgeId(i));
    }
    for (std::size_t c = 0; c < count; ++c)
        if (c != big)
            out[c].graph = std::move(builders[c]).build();
    return out;
}

} // namespace strongcolor
