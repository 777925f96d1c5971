#include "strongcolor/solver.hpp"

#include <algorithm>

#include "solver_detail.hpp"
#include "strongcolor/graph_io.hpp"

namespace strongcolor {

using detail::expect;

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::low_degree: return "low_degree";
    case Strategy::loop: return "loop";
    case Strategy::double_edge: return "double_edge";
    case Strategy::girth3: return "girth3";
    case Strategy::girth4: return "girth4";
    case Strategy::girth5: return "girth5";
    case Strategy::girth6: return "girth6";
    }
    return "unknown";
}

int color_ceiling(Strategy s)
{
    switch (s) {
    case Strategy::girth4:
    case Strategy::girth5:
    case Strategy::girth6: return 22;
    default: return 21;
    }
}

MaxDegreeExceeded::MaxDegreeExceeded(std::size_t degree)
    : GraphError("maximum degree " + std::to_string(degree) + " exceeds 4")
{
}

LemmaFailure::LemmaFailure(const std::string& what, PartialColoring p)
    : std::runtime_error(what), partial(std::move(p))
{
}

Unsatisfiable::Unsatisfiable(const std::string& what, std::string ce)
    : std::runtime_error(what), counterexample(std::move(ce))
{
}

std::vector<EdgeId> CycleContext::incident_edges() const
{
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < length(); ++j) {
        out.push_back(a_edges[j]);
        out.push_back(b_edges[j]);
    }
    return out;
}

Dispatch choose_strategy(const MultiGraph& g)
{
    Dispatch d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(VertexId(v)) <= 3) {
            d.strategy = Strategy::low_degree;
            d.vertex = VertexId(v);
            return d;
        }
    }
    if (auto loop = g.find_loop()) {
        d.strategy = Strategy::loop;
        d.loop = loop;
        return d;
    }
    if (auto pair = g.find_parallel_pair()) {
        d.strategy = Strategy::double_edge;
        d.parallel = pair;
        return d;
    }
    // Only cycles of length up to 5 matter; anything longer is the general case.
    d.cycle = find_shortest_cycle(g, 5);
    if (!d.cycle) {
        d.strategy = Strategy::girth6;
        return d;
    }
    switch (d.cycle->length()) {
    case 3: d.strategy = Strategy::girth3; break;
    case 4: d.strategy = Strategy::girth4; break;
    default: d.strategy = Strategy::girth5; break;
    }
    return d;
}

PartialColoring run_strategy(const MultiGraph& g, const Dispatch& d, Telemetry* t)
{
    switch (d.strategy) {
    case Strategy::low_degree: return solve_low_degree(g, d.vertex.value(), t);
    case Strategy::loop: return solve_loop(g, d.loop.value(), t);
    case Strategy::double_edge: return solve_double_edge(g, d.parallel.value(), t);
    case Strategy::girth3: return solve_girth3(g, d.cycle.value(), t);
    case Strategy::girth4: return solve_girth4(g, d.cycle.value(), t);
    case Strategy::girth5: return solve_girth5(g, d.cycle.value(), t);
    case Strategy::girth6: return solve_girth6(g, t);
    }
    throw LemmaAssertion("unknown strategy");
}

namespace {

ComponentReport solve_component(const MultiGraph& g, PartialColoring& out, std::size_t& fallbacks)
{
    ComponentReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    Telemetry& t = r.telemetry;

    const Dispatch d = choose_strategy(g);
    r.strategy = d.strategy;
    std::optional<PartialColoring> col;
    try {
        PartialColoring c = run_strategy(g, d, &t);
        // Final checks on the lemma's output; a failure here hands the valid
        // part of the coloring to the fallback.
        auto bad = verify(g, c);
        if (!bad.empty()) {
            for (const auto& v : bad) {
                c.clear(v.first);
                c.clear(v.second);
            }
            throw LemmaFailure("verify reported " + std::to_string(bad.size()) + " violations",
                               std::move(c));
        }
        ++t.assertions_checked;
        if (!c.is_total())
            throw LemmaFailure("coloring left edges uncolored", std::move(c));
        ++t.assertions_checked;
        if (c.max_color() > color_ceiling(d.strategy))
            throw LemmaFailure("coloring exceeds the strategy's color ceiling", std::move(c));
        ++t.assertions_checked;
        col = std::move(c);
    } catch (LemmaFailure& f) {
        ++fallbacks;
        r.fallback = true;
        r.failure = f.what();
        auto open = f.partial.uncolored();
        col = fallback_exact(g, std::move(f.partial), open);
    }
    r.branch = t.branch;
    r.colors_used = col->colors_used();
    r.max_color = col->max_color();
    out = std::move(*col);
    return r;
}

} // namespace

SolveResult solve(const MultiGraph& g)
{
    if (g.max_degree() > 4)
        throw MaxDegreeExceeded(g.max_degree());

    SolveResult result{PartialColoring(g.edge_count(), kSolverPalette), {}};
    auto& report = result.report;
    for (const auto& comp : edge_components(g)) {
        PartialColoring local(comp.graph.edge_count(), kSolverPalette);
        auto r = solve_component(comp.graph, local, report.fallback_invocations);
        for (std::size_t i = 0; i < comp.edge_map.size(); ++i)
            result.coloring.set(comp.edge_map[i], local.raw(EdgeId(i)));
        report.assertions_checked += r.telemetry.assertions_checked;
        report.components.push_back(std::move(r));
    }
    report.colors_used = result.coloring.colors_used();
    return result;
}

PartialColoring color_except_vertex(const MultiGraph& g, VertexId v, Telemetry* t)
{
    return detail::guarded("color_except_vertex", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, v.index < g.vertex_count(), "anchor vertex exists");
        auto skip = detail::mark(g, g.incident(v));
        greedy_extend(g, detail::filtered(compatible_order(g, v), skip), col, 21);
    });
}

PartialColoring color_except_cycle(const MultiGraph& g, const CycleDescriptor& cycle, Telemetry* t)
{
    return detail::guarded("color_except_cycle", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, is_valid_cycle(g, cycle), "anchor is a cycle of the graph");
        auto skip = detail::mark(g, cycle.edges);
        greedy_extend(g, detail::filtered(compatible_order(g, cycle), skip), col, 21);
    });
}

PartialColoring solve_low_degree(const MultiGraph& g, VertexId v, Telemetry* t)
{
    return detail::guarded("solve_low_degree", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, g.degree(v) <= 3, "anchor vertex has degree at most 3");
        const auto order = compatible_order(g, v);
        const auto& at_v = g.incident(v);
        const auto head = order.size() - at_v.size();
        greedy_extend(g, std::span(order).first(head), col, 21);

        // With three ordinary edges at v, the k-th of them sees at most 17 + k
        // colored neighbours.
        const bool plain = at_v.size() == 3 &&
                           std::none_of(at_v.begin(), at_v.end(),
                                        [&](EdgeId e) { return g.endpoints(e).is_loop(); });
        for (std::size_t k = head; k < order.size(); ++k) {
            if (plain)
                expect(t, detail::colored_neighbours(g, col, order[k]) <= 17 + int(k - head) + 1,
                       "low degree: |N(e_k)| <= 17 + k");
            greedy_extend(g, std::span(order).subspan(k, 1), col, 21);
        }
    });
}

PartialColoring solve_loop(const MultiGraph& g, EdgeId loop, Telemetry* t)
{
    return detail::guarded("solve_loop", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, g.endpoints(loop).is_loop(), "witness edge is a loop");
        greedy_extend(g, compatible_order(g, g.endpoints(loop).u), col, 21);
    });
}

PartialColoring solve_double_edge(const MultiGraph& g, std::pair<EdgeId, EdgeId> pair, Telemetry* t)
{
    return detail::guarded("solve_double_edge", detail::fresh(g), [&](PartialColoring& col) {
        const auto& ep = g.endpoints(pair.first);
        const auto& eq = g.endpoints(pair.second);
        expect(t, !ep.is_loop() && pair.first != pair.second &&
                      std::minmax(ep.u, ep.v) == std::minmax(eq.u, eq.v),
               "witness is a pair of parallel edges");
        const VertexId v = std::min(ep.u, ep.v);
        const auto order = compatible_order(g, v);
        const auto& at_v = g.incident(v);
        const auto head = order.size() - at_v.size();

        // Edges at v: the two others first, then the parallel pair.
        std::vector<EdgeId> tail;
        for (EdgeId e : at_v)
            if (e != pair.first && e != pair.second)
                tail.push_back(e);
        std::sort(tail.begin(), tail.end());
        tail.push_back(std::min(pair.first, pair.second));
        tail.push_back(std::max(pair.first, pair.second));
        expect(t, tail.size() == 4, "double edge: four edges at the shared vertex");

        greedy_extend(g, std::span(order).first(head), col, 21);
        constexpr int bound[4] = {17, 18, 16, 17};
        for (std::size_t k = 0; k < tail.size(); ++k) {
            expect(t, detail::colored_neighbours(g, col, tail[k]) <= bound[k],
                   "double edge: |N(e_k)| bound");
            greedy_extend(g, std::span(tail).subspan(k, 1), col, 21);
        }
    });
}

PartialColoring solve_girth3(const MultiGraph& g, const CycleDescriptor& cycle, Telemetry* t)
{
    auto base = color_except_cycle(g, cycle, t);
    return detail::guarded("solve_girth3", std::move(base), [&](PartialColoring& col) {
        expect(t, cycle.length() == 3, "girth 3: cycle has length 3");
        std::vector<EdgeId> c = cycle.edges;
        std::sort(c.begin(), c.end());
        for (EdgeId e : c)
            expect(t, detail::colored_neighbours(g, col, e) <= 18, "girth 3: |N(c)| <= 18");
        greedy_extend(g, c, col, 21);
    });
}

CycleContext label_cycle_context(const MultiGraph& g, const CycleDescriptor& cycle)
{
    const auto k = cycle.length();
    if (k != 4 && k != 5)
        throw LemmaAssertion("cycle context needs a 4- or 5-cycle");
    if (!is_valid_cycle(g, cycle))
        throw LemmaAssertion("cycle context: not a cycle of the graph");

    CycleContext ctx;
    ctx.cycle = cycle;
    ctx.cycle_edges = cycle.edges;
    auto on_cycle = detail::mark(g, cycle.edges);
    for (std::size_t j = 0; j < k; ++j) {
        VertexId v = cycle.vertices[j];
        std::vector<EdgeId> rest;
        for (EdgeId e : g.incident(v))
            if (!on_cycle[e.index])
                rest.push_back(e);
        if (g.degree(v) != 4 || rest.size() != 2 || g.endpoints(rest[0]).is_loop() ||
            g.endpoints(rest[1]).is_loop())
            throw LemmaAssertion("cycle context: cycle vertex without exactly two further edges");
        std::sort(rest.begin(), rest.end());
        ctx.a_edges.push_back(rest[0]);
        ctx.b_edges.push_back(rest[1]);
    }

    if (k == 5) {
        // Walk the chain a1->b3, a3->b5, a5->b2, a2->b4. At most one of the two
        // edges at the target vertex can conflict with the source (otherwise a
        // 4-cycle appears), so a swap always clears the pair.
        constexpr std::pair<int, int> chain[] = {{1, 3}, {3, 5}, {5, 2}, {2, 4}};
        for (auto [from, to] : chain) {
            if (g.conflicts(ctx.a(from), ctx.b(to))) {
                auto j = static_cast<std::size_t>(to - 1);
                std::swap(ctx.a_edges[j], ctx.b_edges[j]);
            }
        }
        for (auto [from, to] : chain)
            if (g.conflicts(ctx.a(from), ctx.b(to)))
                throw LemmaAssertion("cycle context: could not separate a" + std::to_string(from) +
                                     " from b" + std::to_string(to));
    }
    return ctx;
}

PartialColoring solve_girth6(const MultiGraph& g, Telemetry* t)
{
    const VertexId v(0);
    auto base = color_except_vertex(g, v, t);
    return detail::guarded("solve_girth6", std::move(base), [&](PartialColoring& col) {
        expect(t, g.is_regular(4), "girth 6: graph is 4-regular");
        const auto dist = bfs_distances(g, v);
        std::vector<EdgeId> at_v(g.incident(v).begin(), g.incident(v).end());
        std::sort(at_v.begin(), at_v.end());

        // One outward edge at each neighbour of v.
        std::vector<EdgeId> outward;
        for (EdgeId e : at_v) {
            VertexId u = g.other_end(e, v);
            std::optional<EdgeId> pick;
            for (EdgeId f : g.incident(u))
                if (f != e && dist[g.other_end(f, u).index] == 2 && (!pick || f < *pick))
                    pick = f;
            expect(t, pick.has_value(), "girth 6: neighbour has an edge to distance 2");
            outward.push_back(*pick);
        }
        for (std::size_t i = 0; i < outward.size(); ++i)
            for (std::size_t j = i + 1; j < outward.size(); ++j)
                expect(t, !g.conflicts(outward[i], outward[j]),
                       "girth 6: recolored edges pairwise non-conflicting");
        for (EdgeId e : outward)
            recolor(g, col, e, 22);
        greedy_extend(g, at_v, col, 22);
    });
}

PartialColoring fallback_exact(const MultiGraph& g, PartialColoring col,
                               const std::vector<EdgeId>& uncolored)
{
    if (uncolored.size() > kMaxFallbackEdges)
        throw GraphError("fallback_exact: " + std::to_string(uncolored.size()) +
                         " uncolored edges exceed the limit of " +
                         std::to_string(kMaxFallbackEdges));
    const ColorSet palette = ColorSet::range(1, std::min(col.palette_size(), kSolverPalette));
    std::vector<EdgeId> open = uncolored;
    std::size_t budget = 5'000'000;
    bool out_of_budget = false;

    // DSATUR-style: branch on the open edge with the fewest free colors.
    auto search = [&](auto&& self) -> bool {
        if (budget == 0) {
            out_of_budget = true;
            return false;
        }
        --budget;
        std::size_t pick = open.size();
        ColorSet pick_free;
        int pick_size = kMaxPalette + 1;
        for (std::size_t i = 0; i < open.size(); ++i) {
            if (col.is_colored(open[i]))
                continue;
            ColorSet free = palette.without(blocked_colors(g, col, open[i]));
            if (free.size() < pick_size) {
                pick = i;
                pick_free = free;
                pick_size = free.size();
            }
        }
        if (pick == open.size())
            return true;
        for (Color c : pick_free.to_vector()) {
            col.set(open[pick], c);
            if (self(self))
                return true;
            col.clear(open[pick]);
        }
        return false;
    };
    if (!search(search)) {
        std::string ce = "# graph\n" + emit_graph(g) + "# partial coloring\n" + emit_coloring(col);
        throw Unsatisfiable(out_of_budget ? "fallback_exact: search budget exhausted"
                                : "fallback_exact: partial coloring cannot be completed with 22 colors",
                            std::move(ce));
    }
    return col;
}

} // namespace strongcolor
