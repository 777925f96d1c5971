#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strongcolor/coloring.hpp"
#include "strongcolor/multigraph.hpp"

namespace strongcolor {

struct AvailabilityEntry {
    EdgeId edge;
    ColorSet avail;
};

/// Available-color sets over a set of distinct uncolored edges.
using AvailabilityFamily = std::vector<AvailabilityEntry>;

/// Availability of each listed edge under `col`, in the given order.
AvailabilityFamily availability_family(const MultiGraph& g, const PartialColoring& col,
                                       const std::vector<EdgeId>& edges);

using ColorAssignment = std::vector<std::pair<EdgeId, Color>>;

/// System of distinct representatives by augmenting paths, or nullopt when
/// none exists. Entries come back in family order.
std::optional<ColorAssignment> find_sdr(const AvailabilityFamily& fam);

struct DiscrepancyResult {
    std::vector<EdgeId> subset; // ascending
    int disc = 0;
};

/// Largest families handled by max_discrepancy_subset.
inline constexpr std::size_t kMaxDiscrepancyFamily = 16;

/// Subset S maximising |S| - |union of avail over S|. Ties prefer larger |S|,
/// then the lexicographically smallest ascending id list. Exhaustive; throws
/// std::invalid_argument above kMaxDiscrepancyFamily entries.
DiscrepancyResult max_discrepancy_subset(const AvailabilityFamily& fam);

/// Smallest color available on both edges; throws std::invalid_argument if
/// either edge is not in the family.
std::optional<Color> common_color(const AvailabilityFamily& fam, EdgeId e1, EdgeId e2);

} // namespace strongcolor
