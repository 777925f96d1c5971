#include "strongcolor/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace strongcolor {

AvailabilityFamily availability_family(const MultiGraph& g, const PartialColoring& col,
                                       const std::vector<EdgeId>& edges)
{
    AvailabilityFamily fam;
    fam.reserve(edges.size());
    for (EdgeId e : edges)
        fam.push_back({e, available_colors(g, col, e)});
    return fam;
}

namespace {

// Kuhn's augmenting path from set `i`; colors tried in ascending order.
bool augment(const AvailabilityFamily& fam, std::size_t i, std::vector<int>& owner,
             std::vector<char>& seen)
{
    for (Color c : fam[i].avail.to_vector()) {
        if (seen[c])
            continue;
        seen[c] = 1;
        if (owner[c] < 0 || augment(fam, static_cast<std::size_t>(owner[c]), owner, seen)) {
            owner[c] = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<ColorAssignment> find_sdr(const AvailabilityFamily& fam)
{
    std::vector<int> owner(kMaxPalette + 1, -1);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        std::vector<char> seen(kMaxPalette + 1, 0);
        if (!augment(fam, i, owner, seen))
            return std::nullopt;
    }
    ColorAssignment out(fam.size());
    for (Color c = 1; c <= kMaxPalette; ++c)
        if (owner[c] >= 0)
            out[static_cast<std::size_t>(owner[c])] = {fam[static_cast<std::size_t>(owner[c])].edge, c};
    return out;
}

DiscrepancyResult max_discrepancy_subset(const AvailabilityFamily& fam)
{
    const auto k = fam.size();
    if (k > kMaxDiscrepancyFamily)
        throw std::invalid_argument("max_discrepancy_subset: family larger than " +
                                    std::to_string(kMaxDiscrepancyFamily));

    // Work on the family sorted by edge id so that the lexicographic tie-break
    // can be read off the subset's sorted id list.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fam[a].edge < fam[b].edge; });

    auto ids_of = [&](std::uint32_t mask) {
        std::vector<EdgeId> out;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1u << j))
                out.push_back(fam[idx[j]].edge);
        return out;
    };

    std::uint32_t best_mask = 0;
    int best_disc = 0;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        ColorSet uni;
        int size = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1u << j)) {
                uni |= fam[idx[j]].avail;
                ++size;
            }
        int disc = size - uni.size();
        bool better = disc > best_disc || (disc == best_disc && size > best_size);
        if (!better && disc == best_disc && size == best_size)
            better = ids_of(mask) < ids_of(best_mask);
        if (better) {
            best_mask = mask;
            best_disc = disc;
            best_size = size;
        }
    }
    return {ids_of(best_mask), best_disc};
}

std::optional<Color> common_color(const AvailabilityFamily& fam, EdgeId e1, EdgeId e2)
{
    auto find = [&](EdgeId e) -> const ColorSet& {
        for (const auto& entry : fam)
            if (entry.edge == e)
                return entry.avail;
        throw std::invalid_argument("common_color: edge " + std::to_string(e.index) +
                                    " not in family");
    };
    ColorSet both = find(e1) & find(e2);
    if (both.empty())
        return std::nullopt;
    return both.min();
}

} // namespace strongcolor
