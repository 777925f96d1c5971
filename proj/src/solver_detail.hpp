#pragma once

// Helpers shared by the solver translation units.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strongcolor/coloring.hpp"
#include "strongcolor/metrics.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor::detail {

inline void expect(Telemetry* t, bool ok, std::string_view what)
{
    if (t)
        ++t->assertions_checked;
    if (!ok)
        throw LemmaAssertion(std::string(what));
}

/// Runs `body(col)` and turns palette exhaustion or a failed assertion into a
/// LemmaFailure that carries the coloring reached so far.
template <class Body>
PartialColoring guarded(std::string_view lemma, PartialColoring col, Body&& body)
{
    try {
        body(col);
    } catch (const ColoringError& e) {
        throw LemmaFailure(std::string(lemma) + ": " + e.what(), std::move(col));
    } catch (const LemmaAssertion& e) {
        throw LemmaFailure(std::string(lemma) + ": " + e.what(), std::move(col));
    }
    return col;
}

inline PartialColoring fresh(const MultiGraph& g)
{
    return PartialColoring(g.edge_count(), kSolverPalette);
}

/// Order with every edge marked in `skip` removed.
inline EdgeOrder filtered(const EdgeOrder& order, const std::vector<char>& skip)
{
    EdgeOrder out;
    out.reserve(order.size());
    for (EdgeId e : order)
        if (!skip[e.index])
            out.push_back(e);
    return out;
}

inline std::vector<char> mark(const MultiGraph& g, std::span<const EdgeId> edges)
{
    std::vector<char> m(g.edge_count(), 0);
    for (EdgeId e : edges)
        m[e.index] = 1;
    return m;
}

inline int colored_neighbours(const MultiGraph& g, const PartialColoring& col, EdgeId e)
{
    return static_cast<int>(colored_conflicts(g, col, e).size());
}

inline VertexId far_end(const MultiGraph& g, EdgeId e, VertexId near)
{
    return g.other_end(e, near);
}

} // namespace strongcolor::detail
