#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "strongcolor/multigraph.hpp"

namespace strongcolor {

/// Colors are 1-based. 0 is never a valid color.
using Color = int;

/// Largest palette representable by ColorSet.
inline constexpr int kMaxPalette = 63;

/// The palette the solver works with.
inline constexpr int kSolverPalette = 22;

/// Set of colors in 1..kMaxPalette, stored as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;

    static constexpr ColorSet range(Color lo, Color hi)
    {
        ColorSet s;
        for (Color c = lo; c <= hi; ++c)
            s.insert(c);
        return s;
    }

    constexpr bool contains(Color c) const { return c >= 1 && c <= kMaxPalette && ((bits_ >> c) & 1u); }
    constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
    constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    /// Smallest member; requires !empty().
    constexpr Color min() const { return std::countr_zero(bits_); }

    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr ColorSet without(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    constexpr ColorSet& operator|=(ColorSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

    std::vector<Color> to_vector() const;

    constexpr std::uint64_t bits() const { return bits_; }

private:
    constexpr explicit ColorSet(std::uint64_t b) : bits_(b) {}
    std::uint64_t bits_ = 0;
};

class ColoringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Greedy found no admissible color for `edge`.
class PaletteExhausted : public ColoringError {
public:
    explicit PaletteExhausted(EdgeId e);
    EdgeId edge;
};

/// Edge to color assignment over palette 1..palette_size. Edges may stay
/// uncolored. Validity against a graph is checked by assign() and verify().
class PartialColoring {
public:
    PartialColoring(std::size_t edge_count, int palette_size);

    int palette_size() const { return palette_; }
    std::size_t edge_count() const { return colors_.size(); }

    bool is_colored(EdgeId e) const { return colors_[e.index] != 0; }
    std::optional<Color> color(EdgeId e) const
    {
        auto c = colors_[e.index];
        return c ? std::optional<Color>(c) : std::nullopt;
    }
    /// 0 when uncolored.
    Color raw(EdgeId e) const { return colors_[e.index]; }

    /// Unchecked write; callers own validity. `c` must lie in the palette.
    void set(EdgeId e, Color c);
    void clear(EdgeId e) { colors_[e.index] = 0; }

    std::size_t colored_count() const;
    bool is_total() const { return colored_count() == colors_.size(); }
    std::vector<EdgeId> uncolored() const;

    /// Number of distinct colors in use.
    int colors_used() const;
    Color max_color() const;

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    int palette_;
    std::vector<std::uint8_t> colors_;
};

/// Colors on the conflict neighbourhood of `e` (excluding `e` itself).
ColorSet blocked_colors(const MultiGraph& g, const PartialColoring& col, EdgeId e);

/// Palette colors not used on the conflict neighbourhood of an uncolored `e`.
/// Throws ColoringError if `e` is already colored.
ColorSet available_colors(const MultiGraph& g, const PartialColoring& col, EdgeId e);

/// Checked assignment: `c` must be in the palette and not blocked at `e`.
void assign(const MultiGraph& g, PartialColoring& col, EdgeId e, Color c);

/// Overwrite the color of an already colored edge, checking validity of the
/// new color against the rest of the coloring.
void recolor(const MultiGraph& g, PartialColoring& col, EdgeId e, Color c);

/// Colors each edge of `order` with its least available color not above
/// `max_color` (0 means the palette size). Already colored edges in the
/// coloring are left alone. On failure throws PaletteExhausted and leaves the
/// edges colored so far in place.
void greedy_extend(const MultiGraph& g, std::span<const EdgeId> order, PartialColoring& col,
                   Color max_color = 0);

/// Value-returning form of greedy_extend.
PartialColoring greedy_color(const MultiGraph& g, std::span<const EdgeId> order,
                             PartialColoring col, Color max_color = 0);

/// N(e): colored edges in the conflict neighbourhood of `e`.
std::vector<EdgeId> colored_conflicts(const MultiGraph& g, const PartialColoring& col, EdgeId e);

struct Violation {
    EdgeId first;
    EdgeId second;
    Color color;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every pair of conflicting edges that share a color, each pair reported once
/// with first < second. Empty iff `col` is a valid partial strong coloring.
std::vector<Violation> verify(const MultiGraph& g, const PartialColoring& col);

} // namespace strongcolor
