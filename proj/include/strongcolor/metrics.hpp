#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "strongcolor/multigraph.hpp"

namespace strongcolor {

/// Closed walk through distinct vertices. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % length]`.
struct CycleDescriptor {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
};

/// BFS source: a single vertex or every vertex of a cycle.
using Anchor = std::variant<VertexId, CycleDescriptor>;

using Distances = std::vector<std::uint32_t>;
using EdgeOrder = std::vector<EdgeId>;

/// Shortest-path distance from the anchor to every vertex.
/// Throws GraphError if some vertex is unreachable.
Distances bfs_distances(const MultiGraph& g, const Anchor& anchor);

/// Distance class of an edge: the smaller of its endpoint distances.
inline std::uint32_t edge_distance_class(const MultiGraph& g, const Distances& dist, EdgeId e)
{
    const auto& ep = g.endpoints(e);
    return std::min(dist[ep.u.index], dist[ep.v.index]);
}

/// All edges ordered by nonincreasing distance class from the anchor, ties by
/// ascending edge id.
EdgeOrder compatible_order(const MultiGraph& g, const Anchor& anchor);

/// Shortest cycle of `g` (a loop has length 1, a parallel pair length 2).
/// With `max_length` set, only cycles up to that length are searched for and
/// the BFS from each vertex stops at depth max_length / 2, which keeps the
/// search linear on bounded-degree graphs.
std::optional<CycleDescriptor> find_shortest_cycle(const MultiGraph& g,
                                                   std::optional<std::size_t> max_length = {});

std::optional<std::size_t> girth(const MultiGraph& g);

/// True if `c` is a cycle of `g` through distinct vertices.
bool is_valid_cycle(const MultiGraph& g, const CycleDescriptor& c);

} // namespace strongcolor
