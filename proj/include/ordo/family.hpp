#ifndef ORDO_FAMILY_HPP
#define ORDO_FAMILY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// The claimed left-going arcs of an order do not satisfy the requested family.
struct FamilyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A designated family arc subset plus the acyclic remainder.
struct ArcPartition {
    ArcFamilyKind kind = ArcFamilyKind::Acyclic;
    std::vector<ArcId> family_arcs;   // sorted
    std::vector<ArcId> acyclic_arcs;  // sorted complement
};

// Family membership refined by the side conditions the ordering problems
// need: forced roots, a fixed arborescence root, dipath endpoint sets, or a
// required number of (non-empty) dipaths.
struct FamilyGoal {
    ArcFamilyKind kind = ArcFamilyKind::Acyclic;
    std::vector<Vertex> forced_roots;                    // InBranching
    std::optional<Vertex> root;                          // InArborescence
    std::optional<std::pair<Vertex, Vertex>> endpoints;  // HamiltonianDipath (s, t)
    std::vector<Vertex> sources, sinks;                  // DisjointDipaths: S -> T systems
    std::optional<int> count;                            // DisjointDipaths: # dipaths with >= 1 arc
};

bool satisfies_family(const Digraph& d, const std::vector<ArcId>& arc_ids, const FamilyGoal& goal);

// Arc ids whose head precedes their tail in the order.
std::vector<ArcId> left_arcs(const Digraph& d, const VertexOrder& order);

// Splits the arcs along the order; throws FamilyViolation unless the
// left-going arcs satisfy the kind. The right-going side is acyclic by
// construction.
ArcPartition partition_from_order(const Digraph& d, const VertexOrder& order, ArcFamilyKind kind);

struct FamilyOrderResult {
    SolveResult result;
    std::optional<ArcPartition> partition;  // set on success
};

// Order whose left-going arcs form an in-branching in which every vertex of
// forced_roots is a root; reduces to solve_upper with g = 0 on forced roots
// and 1 elsewhere.
FamilyOrderResult order_in_branching(const Digraph& d, const std::vector<Vertex>& forced_roots);

struct DipathSystemSpec {
    std::vector<Vertex> sources;  // S
    std::vector<Vertex> sinks;    // T, disjoint from S, same size
};

// Order whose left-going arcs form |S| vertex-disjoint S->T dipaths. On
// failure emits either a CutSet of < k vertices meeting every S-T dipath or
// a StuckSet satisfying the four certificate conditions (both re-checkable).
FamilyOrderResult order_k_disjoint_st_dipaths(const Digraph& d, const DipathSystemSpec& spec);

// Order whose left-going arcs form a Hamiltonian s->t dipath (s placed last,
// t first); free endpoints enumerate all ordered pairs lexicographically.
FamilyOrderResult order_hamiltonian_dipath(const Digraph& d,
                                           std::optional<std::pair<Vertex, Vertex>> endpoints);

// Order whose left-going arcs form exactly k vertex-disjoint dipaths with
// free endpoints; each dipath must contain at least one arc. Enumerates all
// disjoint (S, T) pairs; k is capped.
FamilyOrderResult order_disjoint_dipaths_free_endpoints(const Digraph& d, int k, int cap = 2);

// Order whose left-going arcs form an r-in-arborescence and right-going arcs
// an r-out-arborescence; free root enumerates all choices.
FamilyOrderResult order_in_arb_out_arb(const Digraph& d, std::optional<Vertex> root);

// Checks that a claimed cut set has fewer than k vertices and meets every
// S->T dipath.
bool check_cut_set(const Digraph& d, const std::vector<Vertex>& cut, int k,
                   const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks);

// Checks the four stuck-set certificate conditions for the S-T dipath
// ordering problem.
bool check_st_stuck_set(const Digraph& d, const std::vector<Vertex>& stuck,
                        const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks);

// True iff removing the arcs makes the digraph acyclic and every arc of the
// set closes a cycle on its own (lies on a cycle met by no other set arc).
bool is_minimal_feedback_arc_set(const Digraph& d, const std::vector<ArcId>& arcs);

// Topological order of the digraph with the given arcs reversed; returns the
// order iff exactly the given arcs go left in it (which holds when the set is
// an inclusion-wise minimal feedback arc set).
std::optional<VertexOrder> order_from_feedback_arcs(const Digraph& d,
                                                    const std::vector<ArcId>& arcs);

}  // namespace ordo

#endif
