#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongcolor {

/// Dense index into a graph's vertex or edge table. The tag keeps vertex and
/// edge ids from being mixed up at compile time.
template <class Tag>
struct Id {
    std::uint32_t index = 0;

    constexpr Id() = default;
    template <std::integral T>
    constexpr explicit Id(T i) : index(static_cast<std::uint32_t>(i)) {}

    friend constexpr auto operator<=>(Id, Id) = default;
};

struct VertexTag {};
struct EdgeTag {};
using VertexId = Id<VertexTag>;
using EdgeId = Id<EdgeTag>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Endpoints {
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
};

struct Component;

/// Undirected multigraph with loops and parallel edges. Immutable once built;
/// use GraphBuilder to construct one.
///
/// A loop appears once in its vertex's incidence list but adds 2 to the degree.
class MultiGraph {
public:
    MultiGraph() = default;

    std::size_t vertex_count() const { return degree_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Endpoints& endpoints(EdgeId e) const { return edges_[e.index]; }
    const std::vector<Endpoints>& edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const
    {
        return {adjacency_.data() + offsets_[v.index], adjacency_.data() + offsets_[v.index + 1]};
    }

    /// Far endpoint of each edge in incident(v), in the same order (v itself for a loop).
    std::span<const VertexId> neighbours(VertexId v) const
    {
        return {neighbours_.data() + offsets_[v.index], neighbours_.data() + offsets_[v.index + 1]};
    }

    /// Endpoint of `e` that is not `v` (or `v` itself for a loop).
    VertexId other_end(EdgeId e, VertexId v) const
    {
        const auto& ep = edges_[e.index];
        return ep.u == v ? ep.v : ep.u;
    }

    std::size_t degree(VertexId v) const { return degree_[v.index]; }
    std::size_t max_degree() const;
    std::size_t min_degree() const;

    bool is_regular(std::size_t d) const;

    /// Edges at distance at most one from `e`, excluding `e`, sorted by id.
    std::vector<EdgeId> conflict_set(EdgeId e) const;

    /// Calls `fn(f)` for every edge of the conflict neighbourhood of `e`. The
    /// same edge may be visited more than once and `e` itself is visited too.
    template <class Fn>
    void for_each_near(EdgeId e, Fn&& fn) const
    {
        const auto& ep = edges_[e.index];
        visit_around(ep.u, fn);
        if (!ep.is_loop())
            visit_around(ep.v, fn);
    }

    bool conflicts(EdgeId e, EdgeId f) const;

    /// Hint that the incidence bounds of `v` will be read soon.
    void prefetch_bounds(VertexId v) const { __builtin_prefetch(offsets_.data() + v.index); }

    /// Hint that the incidence data of `v` will be read soon.
    void prefetch(VertexId v) const
    {
        const auto at = offsets_[v.index];
        __builtin_prefetch(adjacency_.data() + at);
        __builtin_prefetch(neighbours_.data() + at);
    }

    std::optional<EdgeId> find_loop() const;
    std::optional<std::pair<EdgeId, EdgeId>> find_parallel_pair() const;

private:
    friend class GraphBuilder;
    friend std::vector<Component> edge_components(const MultiGraph& g);

    template <class Fn>
    void visit_around(VertexId x, Fn& fn) const
    {
        for (auto i = offsets_[x.index]; i < offsets_[x.index + 1]; ++i) {
            fn(adjacency_[i]);
            VertexId y = neighbours_[i];
            if (y == x)
                continue;
            for (auto j = offsets_[y.index]; j < offsets_[y.index + 1]; ++j)
                fn(adjacency_[j]);
        }
    }

    // Incidence lists stored back to back: vertex v owns
    // adjacency_[offsets_[v], offsets_[v + 1]), and neighbours_ holds the far
    // endpoint of each of those edges.
    std::vector<Endpoints> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<EdgeId> adjacency_;
    std::vector<VertexId> neighbours_;
    std::vector<std::uint32_t> degree_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t vertex_count = 0);

    void reserve_edges(std::size_t m);
    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);
    EdgeId add_edge(std::size_t u, std::size_t v) { return add_edge(VertexId(u), VertexId(v)); }

    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    std::size_t degree(VertexId v) const { return graph_.degree(v); }

    MultiGraph build() &&;

private:
    MultiGraph graph_;
};

/// Graph induced by one connected component, with the maps back to the
/// parent's ids. Vertex and edge order follow the parent's id order.
struct Component {
    MultiGraph graph;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};

/// Connected components that contain at least one edge, ordered by smallest
/// vertex id.
std::vector<Component> edge_components(const MultiGraph& g);

} // namespace strongcolor

template <class Tag>
struct std::hash<strongcolor::Id<Tag>> {
    std::size_t operator()(strongcolor::Id<Tag> id) const noexcept { return id.index; }
};
