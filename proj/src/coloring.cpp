#include "strongcolor/coloring.hpp"

#include <algorithm>
#include <string>

namespace strongcolor {

std::vector<Color> ColorSet::to_vector() const
{
    std::vector<Color> out;
    for (auto b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

PaletteExhausted::PaletteExhausted(EdgeId e)
    : ColoringError("no color available for edge " + std::to_string(e.index)), edge(e)
{
}

PartialColoring::PartialColoring(std::size_t edge_count, int palette_size)
    : palette_(palette_size), colors_(edge_count, 0)
{
    if (palette_size < 1 || palette_size > kMaxPalette)
        throw ColoringError("palette size must be in 1.." + std::to_string(kMaxPalette));
}

void PartialColoring::set(EdgeId e, Color c)
{
    if (c < 1 || c > palette_)
        throw ColoringError("color " + std::to_string(c) + " outside palette 1.." +
                            std::to_string(palette_));
    colors_[e.index] = static_cast<std::uint8_t>(c);
}

std::size_t PartialColoring::colored_count() const
{
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](auto c) { return c != 0; }));
}

std::vector<EdgeId> PartialColoring::uncolored() const
{
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == 0)
            out.push_back(EdgeId(i));
    return out;
}

int PartialColoring::colors_used() const
{
    ColorSet seen;
    for (auto c : colors_)
        if (c)
            seen.insert(c);
    return seen.size();
}

Color PartialColoring::max_color() const
{
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

ColorSet blocked_colors(const MultiGraph& g, const PartialColoring& col, EdgeId e)
{
    ColorSet blocked;
    g.for_each_near(e, [&](EdgeId f) {
        if (f != e) {
            if (auto c = col.raw(f))
                blocked.insert(c);
        }
    });
    return blocked;
}

ColorSet available_colors(const MultiGraph& g, const PartialColoring& col, EdgeId e)
{
    if (col.is_colored(e))
        throw ColoringError("available_colors: edge " + std::to_string(e.index) +
                            " is already colored");
    return ColorSet::range(1, col.palette_size()).without(blocked_colors(g, col, e));
}

void assign(const MultiGraph& g, PartialColoring& col, EdgeId e, Color c)
{
    if (c < 1 || c > col.palette_size())
        throw ColoringError("assign: color " + std::to_string(c) + " outside palette");
    if (col.is_colored(e))
        throw ColoringError("assign: edge " + std::to_string(e.index) + " is already colored");
    if (blocked_colors(g, col, e).contains(c))
        throw ColoringError("assign: color " + std::to_string(c) + " conflicts at edge " +
                            std::to_string(e.index));
    col.set(e, c);
}

void recolor(const MultiGraph& g, PartialColoring& col, EdgeId e, Color c)
{
    if (c < 1 || c > col.palette_size())
        throw ColoringError("recolor: color " + std::to_string(c) + " outside palette");
    if (blocked_colors(g, col, e).contains(c))
        throw ColoringError("recolor: color " + std::to_string(c) + " conflicts at edge " +
                            std::to_string(e.index));
    col.set(e, c);
}

namespace {

constexpr std::size_t kVertexMaskThreshold = 64;
constexpr std::size_t kLookahead = 16;

} // namespace

void greedy_extend(const MultiGraph& g, std::span<const EdgeId> order, PartialColoring& col,
                   Color max_color)
{
    const Color top = max_color > 0 ? std::min(max_color, col.palette_size()) : col.palette_size();
    const ColorSet palette = ColorSet::range(1, top);
    if (order.size() < kVertexMaskThreshold) {
        for (EdgeId e : order) {
            if (col.is_colored(e))
                continue;
            ColorSet free = palette.without(blocked_colors(g, col, e));
            if (free.empty())
                throw PaletteExhausted(e);
            col.set(e, free.min());
        }
        return;
    }

    // Long orders: keep the colors seen at each vertex. The colors blocked at
    // an uncolored edge uv are those seen at the vertices of N[u] and N[v].
    std::vector<ColorSet> seen(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (Color c = col.raw(EdgeId(i))) {
            const auto& ep = g.endpoints(EdgeId(i));
            seen[ep.u.index].insert(c);
            seen[ep.v.index].insert(c);
        }
    auto around = [&](VertexId x) {
        ColorSet s = seen[x.index];
        for (VertexId y : g.neighbours(x))
            s |= seen[y.index];
        return s;
    };
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k + 3 * kLookahead < order.size())
            __builtin_prefetch(&g.endpoints(order[k + 3 * kLookahead]));
        if (k + 2 * kLookahead < order.size()) {
            const auto& ahead = g.endpoints(order[k + 2 * kLookahead]);
            g.prefetch_bounds(ahead.u);
            g.prefetch_bounds(ahead.v);
        }
        if (k + kLookahead < order.size()) {
            const auto& ahead = g.endpoints(order[k + kLookahead]);
            g.prefetch(ahead.u);
            g.prefetch(ahead.v);
        }
        if (k + kLookahead / 2 < order.size()) {
            const auto& ahead = g.endpoints(order[k + kLookahead / 2]);
            for (VertexId y : g.neighbours(ahead.u))
                __builtin_prefetch(seen.data() + y.index);
            for (VertexId y : g.neighbours(ahead.v))
                __builtin_prefetch(seen.data() + y.index);
        }
        const EdgeId e = order[k];
        if (col.is_colored(e))
            continue;
        const auto& ep = g.endpoints(e);
        ColorSet free = palette.without(around(ep.u) | around(ep.v));
        if (free.empty())
            throw PaletteExhausted(e);
        const Color c = free.min();
        col.set(e, c);
        seen[ep.u.index].insert(c);
        seen[ep.v.index].insert(c);
    }
}

PartialColoring greedy_color(const MultiGraph& g, std::span<const EdgeId> order,
                             PartialColoring col, Color max_color)
{
    greedy_extend(g, order, col, max_color);
    return col;
}

std::vector<EdgeId> colored_conflicts(const MultiGraph& g, const PartialColoring& col, EdgeId e)
{
    auto out = g.conflict_set(e);
    std::erase_if(out, [&](EdgeId f) { return !col.is_colored(f); });
    return out;
}

namespace {

// Two edges conflict exactly when both touch the endpoints of a common edge uv.
// With the colors seen at every vertex, that means a color repeated at one
// vertex, or a color seen at both u and v that no edge joining them carries.
bool has_conflict(const MultiGraph& g, const PartialColoring& col)
{
    std::vector<ColorSet> seen(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Color c = col.raw(EdgeId(i));
        if (c == 0)
            continue;
        const auto& ep = g.endpoints(EdgeId(i));
        if (seen[ep.u.index].contains(c))
            return true;
        seen[ep.u.index].insert(c);
        if (ep.is_loop())
            continue;
        if (seen[ep.v.index].contains(c))
            return true;
        seen[ep.v.index].insert(c);
    }

    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k + kLookahead < edges.size()) {
            __builtin_prefetch(seen.data() + edges[k + kLookahead].u.index);
            __builtin_prefetch(seen.data() + edges[k + kLookahead].v.index);
        }
        const auto& h = edges[k];
        if (h.is_loop())
            continue;
        ColorSet common = seen[h.u.index] & seen[h.v.index];
        if (Color own = col.raw(EdgeId(k)))
            common.erase(own);
        if (common.empty())
            continue;
        auto at_u = g.incident(h.u);
        auto far = g.neighbours(h.u);
        for (std::size_t i = 0; i < at_u.size(); ++i)
            if (far[i] == h.v)
                common.erase(col.raw(at_u[i]));
        if (!common.empty())
            return true;
    }
    return false;
}

} // namespace

std::vector<Violation> verify(const MultiGraph& g, const PartialColoring& col)
{
    std::vector<Violation> out;
    if (!has_conflict(g, col))
        return out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        EdgeId e(i);
        Color c = col.raw(e);
        if (c == 0)
            continue;
        const std::size_t first = out.size();
        g.for_each_near(e, [&](EdgeId f) {
            if (f > e && col.raw(f) == c)
                out.push_back({e, f, c});
        });
        if (out.size() - first > 1) {
            auto by_f = [](const Violation& a, const Violation& b) { return a.second < b.second; };
            auto same_f = [](const Violation& a, const Violation& b) { return a.second == b.second; };
            std::sort(out.begin() + first, out.end(), by_f);
            out.erase(std::unique(out.begin() + first, out.end(), same_f), out.end());
        }
    }
    return out;
}

} // namespace strongcolor
