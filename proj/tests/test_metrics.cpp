#include "doctest.h"
#include "strongcolor/gen.hpp"
#include "strongcolor/metrics.hpp"
#include "support.hpp"

using namespace strongcolor;

namespace {

CycleDescriptor whole_cycle(std::size_t n)
{
    CycleDescriptor c;
    for (std::size_t i = 0; i < n; ++i) {
        c.vertices.push_back(VertexId(i));
        c.edges.push_back(EdgeId(i));
    }
    return c;
}

} // namespace

TEST_CASE("bfs distances from a vertex and from a cycle")
{
    auto c5 = cycle_graph(5);
    CHECK(bfs_distances(c5, VertexId(0)) == Distances{0, 1, 2, 2, 1});
    CHECK(bfs_distances(c5, whole_cycle(5)) == Distances{0, 0, 0, 0, 0});
    auto star = complete_bipartite(1, 4);
    CHECK(bfs_distances(star, VertexId(0)) == Distances{0, 1, 1, 1, 1});
}

TEST_CASE("bfs distances require a connected graph")
{
    GraphBuilder b(3);
    b.add_edge(0, 1);
    auto g = std::move(b).build();
    CHECK_THROWS_AS(bfs_distances(g, VertexId(0)), GraphError);
}

TEST_CASE("edge distance class is the smaller endpoint distance")
{
    auto p = path_graph(6);
    auto d = bfs_distances(p, VertexId(0));
    CHECK(edge_distance_class(p, d, EdgeId(2)) == 2);
    CHECK(edge_distance_class(p, d, EdgeId(4)) == 4);
    auto c5 = cycle_graph(5);
    CHECK(edge_distance_class(c5, bfs_distances(c5, whole_cycle(5)), EdgeId(3)) == 0);
}

TEST_CASE("compatible order puts far edges first")
{
    auto p = path_graph(3); // v-a-b
    auto order = compatible_order(p, VertexId(0));
    CHECK(order == EdgeOrder{EdgeId(1), EdgeId(0)});

    auto k4 = complete_graph(4); // edges 01 02 03 12 13 23
    CycleDescriptor tri{{VertexId(0), VertexId(1), VertexId(2)}, {EdgeId(0), EdgeId(3), EdgeId(1)}};
    REQUIRE(is_valid_cycle(k4, tri));
    auto o = compatible_order(k4, tri);
    // Every K4 edge touches the triangle, so all are class 0 and id order decides.
    CHECK(o == EdgeOrder{EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3), EdgeId(4), EdgeId(5)});

    auto en = erdos_nesetril_5();
    for (std::size_t v = 0; v < en.vertex_count(); ++v) {
        auto ord = compatible_order(en, VertexId(v));
        std::set<EdgeId> last(ord.end() - 4, ord.end());
        std::set<EdgeId> at_v(en.incident(VertexId(v)).begin(), en.incident(VertexId(v)).end());
        CHECK(last == at_v);
    }
}

TEST_CASE("girth of small graphs")
{
    CHECK(!girth(path_graph(6)));
    CHECK(girth(complete_graph(5)) == 3u);
    CHECK(girth(erdos_nesetril_5()) == 4u);
    CHECK(girth(petersen()) == 5u);
    CHECK(girth(robertson()) == 5u);
    CHECK(girth(cage_4_6()) == 6u);

    GraphBuilder b(2);
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    auto par = std::move(b).build();
    CHECK(girth(par) == 2u);

    GraphBuilder l(2);
    l.add_edge(0, 1);
    l.add_edge(1, 1);
    CHECK(girth(std::move(l).build()) == 1u);
}

TEST_CASE("bounded shortest cycle search")
{
    auto cage = cage_4_6();
    CHECK(!find_shortest_cycle(cage, 5));
    auto c = find_shortest_cycle(cage, 6);
    REQUIRE(c);
    CHECK(c->length() == 6);
}

TEST_CASE("property: compatible order is a nonincreasing permutation")
{
    for (const auto& ng : testing::random_corpus(10, 5)) {
        const auto& g = ng.graph;
        for (const auto& comp : edge_components(g)) {
            const auto& h = comp.graph;
            VertexId v(h.vertex_count() / 2);
            auto order = compatible_order(h, v);
            auto d = bfs_distances(h, v);
            REQUIRE(order.size() == h.edge_count());
            std::vector<char> seen(h.edge_count(), 0);
            for (std::size_t i = 0; i < order.size(); ++i) {
                CHECK(!seen[order[i].index]);
                seen[order[i].index] = 1;
                if (i) {
                    auto prev = edge_distance_class(h, d, order[i - 1]);
                    auto cur = edge_distance_class(h, d, order[i]);
                    CHECK(prev >= cur);
                    if (prev == cur)
                        CHECK(order[i - 1] < order[i]);
                }
            }
        }
    }
}

TEST_CASE("property: girth agrees with cycle enumeration on small graphs")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto g = testing::small_random_graph(seed, 10);
        CAPTURE(seed);
        auto expected = testing::naive_girth(g);
        CHECK(girth(g) == expected);
        auto c = find_shortest_cycle(g);
        CHECK(c.has_value() == expected.has_value());
        if (c) {
            CHECK(c->length() == *expected);
            CHECK(is_valid_cycle(g, *c));
        }
    }
}

TEST_CASE("property: witness cycles on the corpus are valid")
{
    for (const auto& ng : testing::random_corpus(10, 8)) {
        auto c = find_shortest_cycle(ng.graph);
        if (!c)
            continue;
        CAPTURE(ng.name);
        CHECK(is_valid_cycle(ng.graph, *c));
        CHECK(girth(ng.graph) == c->length());
    }
}
