#include <algorithm>
#include <array>

#include "solver_detail.hpp"
#include "strongcolor/hall.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor {

using detail::expect;

namespace {

// Pairs (a_i, b_j) that may share a color; the labeling guarantees it.
constexpr std::array<std::pair<int, int>, 3> kSharedPairs = {{{1, 3}, {2, 4}, {3, 5}}};

bool contains(const std::vector<EdgeId>& sorted_ids, EdgeId e)
{
    return std::binary_search(sorted_ids.begin(), sorted_ids.end(), e);
}

std::vector<EdgeId> sorted_incident(const CycleContext& ctx)
{
    auto out = ctx.incident_edges();
    std::sort(out.begin(), out.end());
    return out;
}

void apply(const MultiGraph& g, PartialColoring& col, const ColorAssignment& sdr)
{
    for (auto [e, c] : sdr)
        assign(g, col, e, c);
}

} // namespace

PartialColoring solve_girth5(const MultiGraph& g, const CycleDescriptor& cycle, Telemetry* t)
{
    auto col = detail::guarded("solve_girth5", detail::fresh(g), [&](PartialColoring& col) {
        expect(t, g.is_regular(4), "girth 5: graph is 4-regular");
        const CycleContext ctx = label_cycle_context(g, cycle);
        expect(t, ctx.length() == 5, "girth 5: cycle has length 5");
        for (auto [e, c] : girth5_precoloring(ctx))
            assign(g, col, e, c);
        auto frame = detail::mark(g, ctx.cycle_edges);
        for (EdgeId e : ctx.incident_edges())
            frame[e.index] = 1;
        greedy_extend(g, detail::filtered(compatible_order(g, cycle), frame), col, 22);
    });
    return finish_girth5(g, label_cycle_context(g, cycle), std::move(col), t);
}

ColorAssignment girth5_precoloring(const CycleContext& ctx)
{
    return {{ctx.b(1), 21}, {ctx.c(3), 21}, {ctx.a(5), 22}, {ctx.b(2), 22}};
}

PartialColoring finish_girth5(const MultiGraph& g, const CycleContext& ctx, PartialColoring start,
                              Telemetry* t)
{
    return detail::guarded("solve_girth5", std::move(start), [&](PartialColoring& col) {
        auto set_branch = [&](const char* b) {
            if (t)
                t->branch = b;
        };
        auto frame = detail::mark(g, ctx.cycle_edges);
        for (EdgeId e : ctx.incident_edges())
            frame[e.index] = 1;
        for (auto [e, c] : girth5_precoloring(ctx))
            expect(t, col.color(e) == c, "girth 5: precolored edges carry 21 and 22");
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            expect(t, frame[i] || col.is_colored(EdgeId(i)), "girth 5: edges off the frame are colored");

        std::vector<EdgeId> open;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (frame[i] && !col.is_colored(EdgeId(i)))
                open.push_back(EdgeId(i));
        const auto on_cycle = detail::mark(g, ctx.cycle_edges);

        const auto fam = availability_family(g, col, open);
        int min_cycle = kMaxPalette, min_incident = kMaxPalette;
        for (const auto& [e, avail] : fam) {
            int& slot = on_cycle[e.index] ? min_cycle : min_incident;
            slot = std::min(slot, avail.size());
        }
        if (t) {
            t->uncolored_before_family = open.size();
            t->min_cycle_availability = min_cycle;
            t->min_incident_availability = min_incident;
        }
        expect(t, open.size() == 11, "girth 5: 11 uncolored edges");
        expect(t, min_cycle >= 8, "girth 5: |A(e)| >= 8 on cycle edges");
        expect(t, min_incident >= 5, "girth 5: |A(e)| >= 5 on incident edges");

        if (auto sdr = find_sdr(fam)) {
            set_branch("sdr");
            apply(g, col, *sdr);
            return;
        }

        const auto worst = max_discrepancy_subset(fam);
        const auto& S = worst.subset;
        expect(t, worst.disc > 0, "girth 5: no SDR implies positive discrepancy");
        const bool touches_cycle =
            std::any_of(S.begin(), S.end(), [&](EdgeId e) { return on_cycle[e.index] != 0; });

        if (!touches_cycle) {
            // Color S, then the rest extends by an SDR.
            set_branch("discrepancy_off_cycle");
            greedy_extend(g, S, col, 22);
            std::vector<EdgeId> rest;
            for (EdgeId e : open)
                if (!contains(S, e))
                    rest.push_back(e);
            auto sdr = find_sdr(availability_family(g, col, rest));
            expect(t, sdr.has_value(), "girth 5: coloring of S extends to the rest");
            if (t)
                t->extension_checked = true;
            apply(g, col, *sdr);
            return;
        }

        expect(t, S.size() >= 9 && S.size() <= 11, "girth 5: |S| is 9, 10 or 11");

        std::optional<std::size_t> chosen;
        std::optional<Color> shared;
        for (std::size_t p = 0; p < kSharedPairs.size() && !chosen; ++p) {
            auto [i, j] = kSharedPairs[p];
            EdgeId x = ctx.a(i), y = ctx.b(j);
            if (!contains(S, x) || !contains(S, y))
                continue;
            if (auto c = common_color(fam, x, y)) {
                chosen = p;
                shared = c;
            }
        }

        auto remaining_incident = [&] {
            std::vector<EdgeId> out;
            for (EdgeId e : sorted_incident(ctx))
                if (!col.is_colored(e))
                    out.push_back(e);
            return out;
        };

        if (chosen) {
            set_branch("discrepancy_pair");
            auto [i, j] = kSharedPairs[*chosen];
            assign(g, col, ctx.a(i), *shared);
            assign(g, col, ctx.b(j), *shared);
            greedy_extend(g, remaining_incident(), col, 22);
            const std::vector<EdgeId> cycle_order =
                i == 2 ? std::vector{ctx.c(2), ctx.c(4), ctx.c(1), ctx.c(5)}
                       : std::vector{ctx.c(2), ctx.c(4), ctx.c(5), ctx.c(1)};
            greedy_extend(g, cycle_order, col, 22);
            return;
        }

        set_branch("discrepancy_all");
        expect(t, S.size() == 11, "girth 5: without a shared pair color |S| = 11");
        const auto x = common_color(fam, ctx.c(1), ctx.a(4));
        expect(t, x.has_value(), "girth 5: c1 and a4 share an available color");
        assign(g, col, ctx.c(1), *x);
        assign(g, col, ctx.a(4), *x);

        // Exactly one edge of each pair had x available; color those first.
        std::vector<EdgeId> holders;
        for (auto [i, j] : kSharedPairs) {
            bool on_a = false, on_b = false;
            for (const auto& entry : fam) {
                if (entry.edge == ctx.a(i))
                    on_a = entry.avail.contains(*x);
                if (entry.edge == ctx.b(j))
                    on_b = entry.avail.contains(*x);
            }
            expect(t, on_a != on_b, "girth 5: x available on exactly one edge of each pair");
            holders.push_back(on_a ? ctx.a(i) : ctx.b(j));
        }
        greedy_extend(g, holders, col, 22);
        greedy_extend(g, remaining_incident(), col, 22);
        greedy_extend(g, std::vector{ctx.c(2), ctx.c(4), ctx.c(5)}, col, 22);
    });
}

} // namespace strongcolor
