#include "strongcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace strongcolor {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> conflict_masks(const MultiGraph& g)
{
    std::vector<Mask> out(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (EdgeId f : g.conflict_set(EdgeId(i)))
            out[i] |= Mask{1} << f.index;
    return out;
}

class Search {
public:
    Search(const MultiGraph& g, int k) : g_(g), k_(k), conflict_(conflict_masks(g)), color_(g.edge_count(), 0)
    {
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), 0u);
        std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) {
            return std::popcount(conflict_[a]) > std::popcount(conflict_[b]);
        });
    }

    std::optional<PartialColoring> run()
    {
        if (!descend(0, 0))
            return std::nullopt;
        PartialColoring col(g_.edge_count(), std::max(k_, 1));
        for (std::size_t i = 0; i < color_.size(); ++i)
            col.set(EdgeId(i), color_[i]);
        return col;
    }

private:
    Mask forbidden(std::uint32_t e) const
    {
        Mask out = 0;
        for (Mask m = conflict_[e]; m; m &= m - 1) {
            auto f = static_cast<std::size_t>(std::countr_zero(m));
            if (color_[f])
                out |= Mask{1} << color_[f];
        }
        return out;
    }

    // Every uncolored neighbour of e must keep a color in 1..k.
    bool neighbours_alive(std::uint32_t e) const
    {
        const Mask all = ((Mask{1} << (k_ + 1)) - 1) & ~Mask{1};
        for (Mask m = conflict_[e]; m; m &= m - 1) {
            auto f = static_cast<std::uint32_t>(std::countr_zero(m));
            if (!color_[f] && (all & ~forbidden(f)) == 0)
                return false;
        }
        return true;
    }

    bool descend(std::size_t depth, int used)
    {
        if (depth == order_.size())
            return true;
        const auto e = order_[depth];
        const Mask blocked = forbidden(e);
        // A fresh color is interchangeable with any other fresh one.
        const int top = std::min(k_, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (blocked & (Mask{1} << c))
                continue;
            color_[e] = c;
            if (neighbours_alive(e) && descend(depth + 1, std::max(used, c)))
                return true;
        }
        color_[e] = 0;
        return false;
    }

    const MultiGraph& g_;
    int k_;
    std::vector<Mask> conflict_;
    std::vector<int> color_;
    std::vector<std::uint32_t> order_;
};

} // namespace

int greedy_upper_bound(const MultiGraph& g)
{
    std::vector<EdgeId> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = EdgeId(i);
    return greedy_color(g, order, PartialColoring(g.edge_count(), kMaxPalette)).colors_used();
}

int conflict_clique_lower_bound(const MultiGraph& g)
{
    const auto m = g.edge_count();
    std::vector<std::vector<EdgeId>> nb(m);
    for (std::size_t i = 0; i < m; ++i)
        nb[i] = g.conflict_set(EdgeId(i));
    int best = m > 0 ? 1 : 0;
    for (std::size_t s = 0; s < m; ++s) {
        std::vector<EdgeId> clique{EdgeId(s)};
        for (EdgeId f : nb[s]) {
            bool ok = std::all_of(clique.begin(), clique.end(), [&](EdgeId c) {
                return std::binary_search(nb[f.index].begin(), nb[f.index].end(), c);
            });
            if (ok)
                clique.push_back(f);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

ExactResult exact_strong_index(const MultiGraph& g, int upper_bound)
{
    if (g.edge_count() > kMaxExactEdges)
        throw std::invalid_argument("exact_strong_index: more than " +
                                    std::to_string(kMaxExactEdges) + " edges");
    if (upper_bound < 1)
        throw std::invalid_argument("exact_strong_index: upper bound must be positive");
    upper_bound = std::min(upper_bound, kMaxPalette);
    if (g.edge_count() == 0)
        return {0, PartialColoring(0, 1)};

    const int lower = conflict_clique_lower_bound(g);
    std::optional<PartialColoring> best;
    int k = greedy_upper_bound(g);
    if (k <= upper_bound) {
        best = Search(g, k).run();
    } else {
        k = upper_bound;
        best = Search(g, k).run();
        if (!best)
            throw BoundTooLow("no strong edge coloring with " + std::to_string(upper_bound) +
                              " colors");
    }
    k = best->colors_used();
    while (k > lower) {
        auto next = Search(g, k - 1).run();
        if (!next)
            break;
        best = std::move(next);
        k = best->colors_used();
    }
    // Rebuild the witness over exactly chi_s colors.
    PartialColoring witness(g.edge_count(), std::max(k, 1));
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        witness.set(EdgeId(i), best->raw(EdgeId(i)));
    return {k, std::move(witness)};
}

} // namespace strongcolor
