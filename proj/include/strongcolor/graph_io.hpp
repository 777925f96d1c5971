#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "strongcolor/coloring.hpp"
#include "strongcolor/multigraph.hpp"

namespace strongcolor {

/// Malformed graph or coloring text. `line` is 1-based, 0 when not tied to a
/// particular line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg);
    std::size_t line;
};

/// Graph text:
///
///     # comment
///     p sec <n> <m>
///     e <u> <v>        (m lines, 1-based vertices)
///
/// Edge ids follow line order. `e u u` is a loop; repeated lines are parallel
/// edges. Blank lines and lines starting with '#' are ignored.
MultiGraph parse_graph(std::string_view text);

/// Canonical text: header then one edge line per edge, no comments.
std::string emit_graph(const MultiGraph& g);

/// Coloring text: one `<edge_id> <color>` line per colored edge, 0-based ids,
/// ascending.
std::string emit_coloring(const PartialColoring& col);

/// Parses coloring text for a graph with `edge_count` edges. The palette is
/// the larger of `min_palette` and the largest color present.
PartialColoring parse_coloring(std::string_view text, std::size_t edge_count,
                               int min_palette = kSolverPalette);

} // namespace strongcolor
