#pragma once

#include <stdexcept>

#include "strongcolor/coloring.hpp"
#include "strongcolor/multigraph.hpp"

namespace strongcolor {

class BoundTooLow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactResult {
    int chi_s = 0;
    PartialColoring witness;
};

/// Largest graph the exact search accepts.
inline constexpr std::size_t kMaxExactEdges = 40;

/// Strong chromatic index by backtracking: edges in descending conflict-degree
/// order, forward checking, and first-use color canonicalisation. Starts from
/// the greedy coloring and tightens one color at a time until infeasible or a
/// conflict clique shows optimality.
///
/// Throws BoundTooLow if no coloring within `upper_bound` colors exists and
/// std::invalid_argument beyond kMaxExactEdges edges.
ExactResult exact_strong_index(const MultiGraph& g, int upper_bound = 22);

/// Colors used by greedy in ascending edge-id order.
int greedy_upper_bound(const MultiGraph& g);

/// Size of a set of pairwise conflicting edges found greedily from every seed.
int conflict_clique_lower_bound(const MultiGraph& g);

} // namespace strongcolor
