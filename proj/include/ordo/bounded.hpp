#ifndef ORDO_BOUNDED_HPP
#define ORDO_BOUNDED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// Whether a solver sums the stored arc weights or counts each arc as 1.
enum class WeightMode { Arc, Unit };

// Preference among equally qualified vertices: pick the one minimizing
// rank[v]. Defaults to lowest id. Feasibility is invariant under this choice;
// it only pins the emitted order.
using TieBreak = std::vector<int>;

// (-inf, g; sum w)-bounded ordering: fixes vertices right to left, each time
// choosing a vertex whose weighted outdegree into the remaining set is <= g.
// Infeasible yields the final remaining set, an induced subgraph in which
// every vertex violates its bound.
SolveResult solve_upper(const Digraph& d, const std::vector<double>& g,
                        WeightMode mode = WeightMode::Arc, const TieBreak* tie = nullptr);

// (f, +inf; sum w)-bounded ordering; left-to-right mirror of solve_upper.
SolveResult solve_lower(const Digraph& d, const std::vector<double>& f,
                        WeightMode mode = WeightMode::Arc, const TieBreak* tie = nullptr);

// Order minimizing the maximum weighted left-outdegree, found by the greedy
// that always fixes an argmin-outdegree vertex; returns the optimum value.
std::pair<VertexOrder, double> solve_minmax(const Digraph& d, WeightMode mode = WeightMode::Arc);

// solve_upper additionally respecting u-before-v constraints. The pairs need
// not be transitively closed. Throws SpecError if the precedence relation is
// cyclic.
SolveResult solve_upper_with_precedence(const Digraph& d, const std::vector<double>& g,
                                        const std::vector<std::pair<Vertex, Vertex>>& prec,
                                        WeightMode mode = WeightMode::Arc);

// Exactly one of f(v)/g(v) per vertex: vertices with a finite f carry a lower
// bound, vertices with g < +inf an upper bound. Exact search (memoized
// right-to-left backtracking); exponential in the worst case.
SolveResult solve_mixed_per_vertex(const Digraph& d, const BoundSpec& spec,
                                   WeightMode mode = WeightMode::Arc);

// d-distance (-inf, g)-bounded ordering for d = n - k: the bound g(v) applies
// only to arcs from v into its min(d, i-1) immediate predecessors. Enumerates
// all fixings of the first k and last k positions, solving the reduced
// problem on the middle. k is capped (default 2) since the enumeration has
// n!/(n-2k)! branches.
SolveResult solve_d_distance_large(const Digraph& d, const std::vector<double>& g, int k,
                                   int cap = 2, WeightMode mode = WeightMode::Arc);

// Window degree sums of an order under the d-distance rule; for checks.
std::vector<double> d_distance_window_degrees(const Digraph& d, const VertexOrder& order, int dist,
                                              WeightMode mode = WeightMode::Arc);

struct InArbsResult {
    SolveResult result;
    // Populated for k == 1 on success: one left-going arc per non-root vertex
    // forming a spanning r-in-arborescence.
    std::optional<std::vector<ArcId>> arborescence;
};

// k arc-disjoint r-in-arborescences with acyclic union, via solve_lower with
// f(r) = 0 and f(v) = k elsewhere.
InArbsResult solve_k_arc_disjoint_in_arbs(const Digraph& d, Vertex root, int k);

}  // namespace ordo

#endif
