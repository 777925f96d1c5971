#include <algorithm>
#include <array>

#include "solver_detail.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor {

using detail::expect;

namespace {

// Subscripts of the two packs: {a1,b1,a3,b3} and {a2,b2,a4,b4}.
constexpr std::array<std::array<int, 2>, 2> kPacks = {{{1, 3}, {2, 4}}};

struct Girth4Frame {
    const MultiGraph& g;
    const CycleContext& ctx;

    VertexId far(EdgeId e, int i) const { return g.other_end(e, ctx.vertex(i)); }

    std::array<EdgeId, 2> at(int i) const { return {ctx.a(i), ctx.b(i)}; }

    /// Incident edges at opposite vertices i and i+2 that share their far end.
    int adjacent_pairs(const std::array<int, 2>& pack) const
    {
        int n = 0;
        for (EdgeId x : at(pack[0]))
            for (EdgeId y : at(pack[1]))
                n += far(x, pack[0]) == far(y, pack[1]);
        return n;
    }

    /// Nonadjacent pack pairs in the order (a_i,a_j), (a_i,b_j), (b_i,a_j), (b_i,b_j).
    std::vector<std::pair<EdgeId, EdgeId>> cross_pairs(const std::array<int, 2>& pack) const
    {
        std::vector<std::pair<EdgeId, EdgeId>> out;
        for (EdgeId x : at(pack[0]))
            for (EdgeId y : at(pack[1]))
                out.emplace_back(x, y);
        return out;
    }

    /// First cross pair of the pack that may share a color.
    std::optional<std::pair<EdgeId, EdgeId>> shareable(const std::array<int, 2>& pack) const
    {
        for (auto [x, y] : cross_pairs(pack))
            if (!g.conflicts(x, y))
                return std::pair{x, y};
        return std::nullopt;
    }

    /// The edge joining each cross pair when no pair of the pack can share a
    /// color.
    std::vector<EdgeId> diagonals(const std::array<int, 2>& pack, Telemetry* t) const
    {
        std::vector<EdgeId> out;
        for (auto [x, y] : cross_pairs(pack)) {
            const auto& ex = g.endpoints(x);
            const auto& ey = g.endpoints(y);
            std::optional<EdgeId> found;
            for (VertexId p : {ex.u, ex.v})
                for (EdgeId h : g.incident(p)) {
                    if (h == x || h == y)
                        continue;
                    VertexId q = g.other_end(h, p);
                    if ((q == ey.u || q == ey.v) && (!found || h < *found))
                        found = h;
                }
            expect(t, found.has_value(), "girth 4: conflicting pack pair is joined by an edge");
            out.push_back(*found);
        }
        std::sort(out.begin(), out.end());
        expect(t, std::adjacent_find(out.begin(), out.end()) == out.end(),
               "girth 4: four distinct diagonal edges");
        auto frame = detail::mark(g, ctx.cycle_edges);
        for (EdgeId e : ctx.incident_edges())
            frame[e.index] = 1;
        for (EdgeId d : out)
            expect(t, !frame[d.index], "girth 4: diagonal edges lie off the cycle frame");
        return out;
    }
};

std::vector<EdgeId> sorted(std::vector<EdgeId> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

void expect_cycle_room(const MultiGraph& g, const CycleContext& ctx, const PartialColoring& col,
                       Telemetry* t)
{
    for (EdgeId c : ctx.cycle_edges)
        expect(t, available_colors(g, col, c).size() >= 4, "girth 4: |A(c_i)| >= 4");
}

} // namespace

PartialColoring solve_girth4(const MultiGraph& g, const CycleDescriptor& cycle, Telemetry* t)
{
    return detail::guarded("solve_girth4", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, g.is_regular(4), "girth 4: graph is 4-regular");
        const CycleContext ctx = label_cycle_context(g, cycle);
        expect(t, ctx.length() == 4, "girth 4: cycle has length 4");
        const Girth4Frame frame{g, ctx};

        const auto order = compatible_order(g, cycle);
        const auto cycle_edges = sorted(ctx.cycle_edges);
        const auto incident = sorted(ctx.incident_edges());
        const int pairs0 = frame.adjacent_pairs(kPacks[0]);
        const int pairs1 = frame.adjacent_pairs(kPacks[1]);

        auto set_branch = [&](const char* b) {
            if (t)
                t->branch = b;
        };

        // Color everything outside C and `held`, then C, then `held`.
        auto diagonal_finish = [&](const std::vector<EdgeId>& held) {
            auto skip = detail::mark(g, cycle_edges);
            for (EdgeId d : held)
                skip[d.index] = 1;
            greedy_extend(g, detail::filtered(order, skip), col, 21);
            greedy_extend(g, cycle_edges, col, 22);
            greedy_extend(g, held, col, 22);
        };

        if (pairs0 + pairs1 >= 2) {
            set_branch("adjacent_pairs");
            auto skip = detail::mark(g, cycle_edges);
            for (EdgeId e : incident)
                skip[e.index] = 1;
            greedy_extend(g, detail::filtered(order, skip), col, 21);
            greedy_extend(g, incident, col, 21);
            expect_cycle_room(g, ctx, col, t);
            greedy_extend(g, cycle_edges, col, 22);
            return;
        }

        if (pairs0 + pairs1 == 1) {
            // The pack without the adjacent pair.
            const auto& pack = pairs0 == 1 ? kPacks[1] : kPacks[0];
            if (auto share = frame.shareable(pack)) {
                set_branch("one_pair_shared");
                assign(g, col, share->first, 22);
                assign(g, col, share->second, 22);
                greedy_extend(g, detail::filtered(order, detail::mark(g, cycle_edges)), col, 21);
                expect_cycle_room(g, ctx, col, t);
                greedy_extend(g, cycle_edges, col, 22);
            } else {
                set_branch("one_pair_diagonal");
                diagonal_finish(frame.diagonals(pack, t));
            }
            return;
        }

        auto share0 = frame.shareable(kPacks[0]);
        auto share1 = frame.shareable(kPacks[1]);
        if (share0 && share1) {
            set_branch("no_pair_shared");
            assign(g, col, share0->first, 21);
            assign(g, col, share0->second, 21);
            assign(g, col, share1->first, 22);
            assign(g, col, share1->second, 22);
            greedy_extend(g, detail::filtered(order, detail::mark(g, cycle_edges)), col, 22);
            expect_cycle_room(g, ctx, col, t);
            greedy_extend(g, cycle_edges, col, 22);
            return;
        }
        set_branch("no_pair_diagonal");
        diagonal_finish(frame.diagonals(share0 ? kPacks[1] : kPacks[0], t));
    });
}

} // namespace strongcolor
