#ifndef ORDO_ORACLE_HPP
#define ORDO_ORACLE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "ordo/bounded.hpp"
#include "ordo/family.hpp"
#include "ordo/result.hpp"

namespace ordo {

// Exhaustive-search caps; exceeding one raises CapExceeded, never silent
// sampling.
struct OracleConfig {
    int order_cap = 8;      // max n for permutation search
    int partition_cap = 22; // max number of arcs in the partition search domain
};

struct BoundsPredicate {
    BoundSpec bounds;
    WeightMode mode = WeightMode::Arc;
};

struct FamilyPredicate {
    FamilyGoal goal;
};

// Upper bounds applied only to arcs from v into its min(dist, i-1) immediate
// predecessors.
struct DDistancePredicate {
    int dist = 0;
    std::vector<double> g;
    WeightMode mode = WeightMode::Arc;
};

struct ExactPredicate {
    std::vector<int> m_delta;
    std::vector<int> m_rho;
};

// Simultaneous unweighted bounds on delta_left and rho_right; absent sides
// default to vacuous. Covers both polynomial variants and, for oracle use,
// the NP-complete cells as well.
struct SimultaneousPredicate {
    std::vector<double> f_delta, g_delta;  // empty = vacuous
    std::vector<double> f_rho, g_rho;
};

using OrderPredicate = std::variant<BoundsPredicate, FamilyPredicate, DDistancePredicate,
                                    ExactPredicate, SimultaneousPredicate>;

// Direct re-evaluation of a complete order against a predicate; shares no
// code with the search engines and doubles as the verification path.
bool evaluate_order(const Digraph& d, const OrderPredicate& pred, const VertexOrder& order);

// Lexicographically-first satisfying permutation, or Infeasible with no
// witness once the (pruned) enumeration is exhausted.
SolveResult oracle_order(const Digraph& d, const OrderPredicate& pred, const OracleConfig& cfg = {});

struct PartitionResult {
    bool feasible = false;
    ArcPartition partition;
};

// Some partition of the arcs into a member of the family and an acyclic
// remainder. For subset-closed families the family part is searched among
// arcs lying on directed cycles only; the other families need the full arc
// set as domain.
PartitionResult oracle_partition(const Digraph& d, ArcFamilyKind kind, const OracleConfig& cfg = {});

struct DecreasingMinResult {
    bool feasible = false;
    VertexOrder order;
    std::vector<int> sorted_degrees;  // delta_left, sorted non-increasingly
};

// Among orders with delta_left <= g everywhere, the one whose non-increasingly
// sorted left-outdegree vector is lexicographically minimal.
DecreasingMinResult oracle_decreasing_min(const Digraph& d, const std::vector<double>& g,
                                          const OracleConfig& cfg = {});

struct InBranchingCoverResult {
    bool feasible = false;
    int size = 0;
    std::vector<ArcId> arcs;
};

// Minimum-cardinality in-branching meeting every directed cycle.
InBranchingCoverResult oracle_min_inbranching_cover(const Digraph& d, const OracleConfig& cfg = {});

struct LexObjective {
    enum class Side { FromLeft, FromRight };
    enum class Sense { Min, Max };
    Side side = Side::FromLeft;
    Sense sense = Sense::Min;
};

struct LexResult {
    VertexOrder order;
    std::vector<int> degrees;  // delta_left per position, left to right
};

// Optimal unconstrained order under the lexicographic objective; vectors are
// compared left-to-right for FromLeft and right-to-left for FromRight.
LexResult oracle_lex(const Digraph& d, const LexObjective& obj, const OracleConfig& cfg = {});

}  // namespace ordo

#endif
