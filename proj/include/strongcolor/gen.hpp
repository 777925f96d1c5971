#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strongcolor/multigraph.hpp"

namespace strongcolor {

enum class GenKind { erdos_nesetril_5, star_neighborhood, random_max4, random_4regular };

std::string to_string(GenKind k);
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenSpec {
    GenKind kind = GenKind::random_max4;
    std::size_t n = 0;
    std::size_t m = 0; // random_max4 only
    std::uint64_t seed = 0;
    std::optional<std::size_t> min_girth;
    bool allow_loops = false;
    bool allow_parallel = false;
};

class RejectionBudgetExhausted : public std::runtime_error {
public:
    RejectionBudgetExhausted(std::size_t attempts, const std::string& what)
        : std::runtime_error(what), attempts_(attempts)
    {
    }
    std::size_t attempts() const { return attempts_; }

private:
    std::size_t attempts_;
};

/// Restarts allowed before random_4regular gives up.
inline constexpr std::size_t kRejectionBudget = 2000;

struct Generated {
    MultiGraph graph;
    std::optional<std::size_t> girth;
};

/// The blown-up 5-cycle: vertex 2i+j is copy j of cycle vertex i.
MultiGraph erdos_nesetril_5();

/// Center edge (0,1) whose conflict set has the largest possible size, 24.
MultiGraph star_neighborhood();

/// n vertices, m edges, maximum degree at most 4.
MultiGraph random_max4(std::size_t n, std::size_t m, std::uint64_t seed, bool allow_loops = false,
                       bool allow_parallel = false);

/// 4-regular graph from the pairing model. Pairs that would close a cycle
/// of length 3..min_girth-1 are rejected as they are drawn, and a stuck
/// attempt restarts. Loops and parallel edges are rejected unless allowed.
Generated random_4regular(std::size_t n, std::uint64_t seed, std::size_t min_girth = 3,
                          bool allow_loops = false, bool allow_parallel = false);

Generated generate(const GenSpec& spec);

// Named graphs.
MultiGraph cycle_graph(std::size_t n);
MultiGraph path_graph(std::size_t n);
MultiGraph complete_graph(std::size_t n);
MultiGraph complete_bipartite(std::size_t a, std::size_t b);
MultiGraph petersen();
MultiGraph robertson();
/// Incidence graph of the projective plane of order 3.
MultiGraph cage_4_6();

} // namespace strongcolor
