#include "strongcolor/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace strongcolor {

ParseError::ParseError(std::size_t l, const std::string& msg)
    : std::runtime_error(l ? "line " + std::to_string(l) + ": " + msg : msg), line(l)
{
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s)
{
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

/// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#')
            continue;
        fn(line_no, tok);
    }
}

} // namespace

MultiGraph parse_graph(std::string_view text)
{
    std::optional<GraphBuilder> builder;
    std::uint64_t declared_m = 0;
    std::size_t header_line = 0;

    for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& tok) {
        if (tok[0] == "p") {
            if (builder)
                throw ParseError(ln, "duplicate header");
            if (tok.size() != 4 || tok[1] != "sec")
                throw ParseError(ln, "expected 'p sec <n> <m>'");
            auto n = to_uint(tok[2]);
            auto m = to_uint(tok[3]);
            if (!n || !m || *n > UINT32_MAX || *m > UINT32_MAX)
                throw ParseError(ln, "bad vertex or edge count");
            builder.emplace(*n);
            declared_m = *m;
            header_line = ln;
            return;
        }
        if (tok[0] == "e") {
            if (!builder)
                throw ParseError(ln, "edge line before header");
            if (tok.size() != 3)
                throw ParseError(ln, "expected 'e <u> <v>'");
            auto u = to_uint(tok[1]);
            auto v = to_uint(tok[2]);
            if (!u || !v)
                throw ParseError(ln, "bad vertex index");
            const auto n = builder->vertex_count();
            if (*u < 1 || *u > n || *v < 1 || *v > n)
                throw ParseError(ln, "vertex index out of range 1.." + std::to_string(n));
            if (builder->edge_count() >= declared_m)
                throw ParseError(ln, "more edge lines than the header declares (" +
                                         std::to_string(declared_m) + ")");
            builder->add_edge(VertexId(*u - 1), VertexId(*v - 1));
            return;
        }
        throw ParseError(ln, "unrecognised line starting with '" + std::string(tok[0]) + "'");
    });

    if (!builder)
        throw ParseError(0, "missing 'p sec <n> <m>' header");
    if (builder->edge_count() != declared_m)
        throw ParseError(header_line, "header declares " + std::to_string(declared_m) +
                                          " edges but " + std::to_string(builder->edge_count()) +
                                          " were given");
    return std::move(*builder).build();
}

std::string emit_graph(const MultiGraph& g)
{
    std::string out = "p sec " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& ep : g.edges())
        out += "e " + std::to_string(ep.u.index + 1) + " " + std::to_string(ep.v.index + 1) + "\n";
    return out;
}

std::string emit_coloring(const PartialColoring& col)
{
    std::string out;
    for (std::size_t i = 0; i < col.edge_count(); ++i)
        if (auto c = col.raw(EdgeId(i)))
            out += std::to_string(i) + " " + std::to_string(c) + "\n";
    return out;
}

PartialColoring parse_coloring(std::string_view text, std::size_t edge_count, int min_palette)
{
    std::vector<std::pair<std::size_t, Color>> entries;
    Color top = 0;
    std::optional<std::size_t> last;
    for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& tok) {
        if (tok.size() != 2)
            throw ParseError(ln, "expected '<edge_id> <color>'");
        auto id = to_uint(tok[0]);
        auto c = to_uint(tok[1]);
        if (!id || !c)
            throw ParseError(ln, "bad number");
        if (*id >= edge_count)
            throw ParseError(ln, "edge id " + std::to_string(*id) + " out of range");
        if (*c < 1 || *c > static_cast<std::uint64_t>(kMaxPalette))
            throw ParseError(ln, "color must be in 1.." + std::to_string(kMaxPalette));
        if (last && *id <= *last)
            throw ParseError(ln, "edge ids must be strictly ascending");
        last = *id;
        entries.emplace_back(*id, static_cast<Color>(*c));
        top = std::max(top, static_cast<Color>(*c));
    });
    PartialColoring col(edge_count, std::clamp(std::max(top, min_palette), 1, kMaxPalette));
    for (auto [id, c] : entries)
        col.set(EdgeId(id), c);
    return col;
}

} // namespace strongcolor
