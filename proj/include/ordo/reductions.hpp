#ifndef ORDO_REDUCTIONS_HPP
#define ORDO_REDUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// 3-CNF formula; literals are +v / -v with 1-based variable ids.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    void validate() const;
    // Additionally: every variable occurs exactly three times and the number
    // of clauses equals the number of variables.
    void validate_3xsat3() const;

    int occurrences(int var) const;
};

bool exactly_one_in_three(const CnfFormula& f, const std::vector<bool>& assignment);
bool nae_satisfying(const CnfFormula& f, const std::vector<bool>& assignment);

// A hardness-reduction instance: the digraph, its bounds (when the target is
// a bounded-ordering problem), and a semantic label per vertex. Vertex ids
// are canonical: tags sorted lexicographically.
struct GadgetInstance {
    Digraph digraph;
    BoundSpec bounds;
    std::vector<std::string> tags;

    Vertex vertex(const std::string& tag) const;
    // First arc tag_tail -> tag_head; the gadgets built here have no parallel
    // arcs between distinctly-tagged vertices unless noted.
    ArcId arc_between(const std::string& tag_tail, const std::string& tag_head) const;
};

// Independent-set reduction: vertices {s} u V(G) u E(G) (+ split vertices in
// the simple variant), bounds f(s) = g(s) = k and g = 1 elsewhere. Feasible
// iff G has an independent set of size k. G is taken as a loop-free symmetric
// digraph; its undirected edges drive the construction.
GadgetInstance gadget_independent_set(const Digraph& g_sym, int k, bool simple);

// Same digraph with weights -1 on the s->v arcs and 1 elsewhere; upper bounds
// only, g(s) = -k.
GadgetInstance gadget_independent_set_negweight(const Digraph& g_sym, int k);

// 3-XSAT-3 reduction with bounds f = 1, g = deg - 2 (ends pinned); 10n - 1
// vertices for n variables.
GadgetInstance gadget_3xsat3(const CnfFormula& f);

// The explicit feasible order for an exactly-1-in-3 satisfying assignment;
// throws unless the assignment qualifies, and verifies the bounds before
// returning.
VertexOrder witness_order_3xsat3(const GadgetInstance& inst, const CnfFormula& f,
                                 const std::vector<bool>& assignment);

// Truth values read off a feasible order: x_i is true iff vertex x_i precedes
// every clause vertex.
std::vector<bool> extract_assignment_3xsat3(const GadgetInstance& inst, const CnfFormula& f,
                                            const VertexOrder& order);

// NAE-3-SAT to matching + acyclic partition; 9 vertices per clause plus
// 5 + 2 occ(x_i) per variable.
GadgetInstance gadget_nae3sat_matching(const CnfFormula& f);

// Matching covering all directed cycles, built from an NAE-satisfying
// assignment; validated before returning.
std::vector<ArcId> witness_matching_nae(const GadgetInstance& inst, const CnfFormula& f,
                                        const std::vector<bool>& assignment);

// NAE-3-SAT to perfect matching + acyclic partition; adds one vertex per
// variable and one per occurrence.
GadgetInstance gadget_nae3sat_perfect_matching(const CnfFormula& f);

// Perfect matching covering all directed cycles; also an inclusion-wise
// minimal feedback arc set, so its reversal has a topological order in which
// exactly the matching goes left.
std::vector<ArcId> witness_perfect_matching_nae(const GadgetInstance& inst, const CnfFormula& f,
                                                const std::vector<bool>& assignment);

// x_i is true iff the arc v3^i -> v4^i belongs to the matching.
std::vector<bool> extract_assignment_nae(const GadgetInstance& inst, const CnfFormula& f,
                                         const std::vector<ArcId>& matching);

// Splits every arc with a new vertex: minimum feedback arc sets of the input
// correspond to minimum in-branchings covering all cycles of the output.
Digraph gadget_split_arcs(const Digraph& d);

// Adds a 2-cycle copy per vertex: matching-partition feasibility of the input
// equals disjoint-dipath-partition feasibility of the output.
Digraph gadget_matching_to_dipaths(const Digraph& d);

// Splits vertices into 2-cycles v1 <-> v2 with arcs u2 -> v1 per input arc:
// Hamiltonian dipaths of the input correspond to Hamiltonian-dipath
// partitions of the output.
Digraph gadget_hampath_split(const Digraph& d);

// Complement of an undirected graph, both directions: G has a Hamiltonian
// path iff the output admits a 1-distance (-inf, 0)-bounded order.
Digraph gadget_1distance(const Digraph& g_sym);

// Adds (d-1) complete symmetric digraphs on (l+1) vertices to a 2l-vertex
// 1-distance instance, lifting it to distance d.
Digraph gadget_distance_lift(const Digraph& d1_instance, int dist, int l);

}  // namespace ordo

#endif
