#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongcolor/coloring.hpp"
#include "strongcolor/hall.hpp"
#include "strongcolor/metrics.hpp"
#include "strongcolor/multigraph.hpp"

namespace strongcolor {

enum class Strategy { low_degree, loop, double_edge, girth3, girth4, girth5, girth6 };

std::string_view to_string(Strategy s);

/// Largest color each strategy may use. Everything except girth 4, 5 and 6
/// completes within 21 colors.
int color_ceiling(Strategy s);

class MaxDegreeExceeded : public GraphError {
public:
    explicit MaxDegreeExceeded(std::size_t degree);
};

/// A lemma's counting bound or structural precondition did not hold at run
/// time.
class LemmaAssertion : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown by a lemma procedure that could not finish. Carries the valid
/// partial coloring reached so far.
class LemmaFailure : public std::runtime_error {
public:
    LemmaFailure(const std::string& what, PartialColoring partial);
    PartialColoring partial;
};

/// The exact completion could not extend a partial coloring within 22 colors.
/// `counterexample` holds the graph and the partial coloring in file format.
class Unsatisfiable : public std::runtime_error {
public:
    Unsatisfiable(const std::string& what, std::string counterexample);
    std::string counterexample;
};

/// Run-time bookkeeping filled in by the lemma procedures.
struct Telemetry {
    std::size_t assertions_checked = 0;
    /// Sub-case taken inside the girth 4 or girth 5 procedure.
    std::string branch;

    // Girth-5 family statistics, measured when the 11-edge family is built.
    std::optional<std::size_t> uncolored_before_family;
    std::optional<int> min_cycle_availability;
    std::optional<int> min_incident_availability;
    bool extension_checked = false;
};

/// Labels around a 4- or 5-cycle of a 4-regular graph. Index j of each vector
/// is subscript j + 1. The cycle edge c_i joins cycle.vertices[i - 1] and
/// cycle.vertices[i], and a_i, b_i are the two other edges at
/// cycle.vertices[i - 1], the vertex shared by c_{i-1} and c_i.
struct CycleContext {
    CycleDescriptor cycle;
    std::vector<EdgeId> cycle_edges;
    std::vector<EdgeId> a_edges;
    std::vector<EdgeId> b_edges;

    std::size_t length() const { return cycle_edges.size(); }

    // 1-based subscripts, taken mod length.
    EdgeId c(int i) const { return cycle_edges[wrap(i)]; }
    EdgeId a(int i) const { return a_edges[wrap(i)]; }
    EdgeId b(int i) const { return b_edges[wrap(i)]; }
    VertexId vertex(int i) const { return cycle.vertices[wrap(i)]; }

    /// All a_i and b_i.
    std::vector<EdgeId> incident_edges() const;

private:
    std::size_t wrap(int i) const
    {
        const auto k = static_cast<int>(length());
        return static_cast<std::size_t>(((i - 1) % k + k) % k);
    }
};

/// Strategy for a connected 4-regular-or-lower graph plus the witness it needs.
struct Dispatch {
    Strategy strategy = Strategy::low_degree;
    std::optional<VertexId> vertex;
    std::optional<EdgeId> loop;
    std::optional<std::pair<EdgeId, EdgeId>> parallel;
    std::optional<CycleDescriptor> cycle;
};

/// Case selection on a connected graph of maximum degree 4. All witnesses are
/// the smallest-id candidates.
Dispatch choose_strategy(const MultiGraph& g);

struct ComponentReport {
    Strategy strategy = Strategy::low_degree;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    int colors_used = 0;
    Color max_color = 0;
    std::string branch;
    bool fallback = false;
    std::string failure;
    Telemetry telemetry;
};

struct SolveReport {
    std::vector<ComponentReport> components;
    int colors_used = 0;
    std::size_t assertions_checked = 0;
    std::size_t fallback_invocations = 0;
};

struct SolveResult {
    PartialColoring coloring;
    SolveReport report;
};

/// Strong edge coloring with at most 22 colors for any multigraph of maximum
/// degree 4. Components are handled independently.
/// Throws MaxDegreeExceeded, and Unsatisfiable if a fallback cannot complete.
SolveResult solve(const MultiGraph& g);

/// Solves one connected graph with the given dispatch.
PartialColoring run_strategy(const MultiGraph& g, const Dispatch& d, Telemetry* t = nullptr);

// Lemma procedures. Each expects a connected graph with maximum degree 4,
// works over palette 22 and throws LemmaFailure when a step does not go
// through.

/// Colors every edge not incident to `v` within 21 colors.
PartialColoring color_except_vertex(const MultiGraph& g, VertexId v, Telemetry* t = nullptr);

/// Colors every edge not on `cycle` within 21 colors.
PartialColoring color_except_cycle(const MultiGraph& g, const CycleDescriptor& cycle,
                                   Telemetry* t = nullptr);

PartialColoring solve_low_degree(const MultiGraph& g, VertexId v, Telemetry* t = nullptr);
PartialColoring solve_loop(const MultiGraph& g, EdgeId loop, Telemetry* t = nullptr);
PartialColoring solve_double_edge(const MultiGraph& g, std::pair<EdgeId, EdgeId> pair,
                                  Telemetry* t = nullptr);
PartialColoring solve_girth3(const MultiGraph& g, const CycleDescriptor& cycle,
                             Telemetry* t = nullptr);

/// Throws LemmaAssertion if the cycle is not a 4- or 5-cycle whose vertices
/// each carry exactly two further edges. For 5-cycles the a/b labels are
/// swapped so that (a1,b3), (a3,b5), (a5,b2) and (a2,b4) are each
/// non-conflicting.
CycleContext label_cycle_context(const MultiGraph& g, const CycleDescriptor& cycle);

PartialColoring solve_girth4(const MultiGraph& g, const CycleDescriptor& cycle,
                             Telemetry* t = nullptr);
PartialColoring solve_girth5(const MultiGraph& g, const CycleDescriptor& cycle,
                             Telemetry* t = nullptr);
PartialColoring solve_girth6(const MultiGraph& g, Telemetry* t = nullptr);

/// The four precolored frame edges of the girth-5 procedure: b1 and c3 get
/// 21, a5 and b2 get 22.
ColorAssignment girth5_precoloring(const CycleContext& ctx);

/// Second half of solve_girth5. `start` must carry girth5_precoloring(ctx)
/// and color every edge off the cycle and its incident edges; the remaining
/// 11 edges are colored through Hall's condition or the discrepancy cases.
PartialColoring finish_girth5(const MultiGraph& g, const CycleContext& ctx, PartialColoring start,
                              Telemetry* t = nullptr);

/// Largest uncolored set fallback_exact accepts.
inline constexpr std::size_t kMaxFallbackEdges = 32;

/// Backtracking completion of `col` over the listed uncolored edges within
/// palette 22. Throws Unsatisfiable when no completion exists or the search
/// budget runs out, and GraphError if more than kMaxFallbackEdges are listed.
PartialColoring fallback_exact(const MultiGraph& g, PartialColoring col,
                               const std::vector<EdgeId>& uncolored);

} // namespace strongcolor
