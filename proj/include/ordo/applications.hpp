#ifndef ORDO_APPLICATIONS_HPP
#define ORDO_APPLICATIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// Complete rankings of the same candidate set, one per judge.
struct RankingProfile {
    int num_candidates = 0;
    std::vector<std::vector<int>> rankings;  // each a permutation of 0..num_candidates-1
    std::vector<std::string> candidate_names;

    void validate() const;
};

// Arc u -> v iff strictly more than half of the judges rank u before v; ties
// produce no arc, keeping the digraph simple and antisymmetric.
Digraph build_penalty_digraph(const RankingProfile& profile);

// Consensus order minimizing the maximum unfairness phi(v) = delta_left(v)
// in the penalty digraph.
struct UnfairnessResult {
    std::vector<int> order;  // candidate ids, best ranked first
    int max_phi = 0;
};
UnfairnessResult minmax_unfairness_order(const RankingProfile& profile);

// Disappointment digraph: arc v -> u with weight w_v(u) = number of judges
// ranking v before u (zero-weight arcs omitted).
Digraph build_disappointment_digraph(const RankingProfile& profile);

// Order in which each candidate's total disappointment stays within g.
SolveResult bounded_disappointment_order(const RankingProfile& profile,
                                         const std::vector<double>& g);

// Influence network: arc u -> v means u influences v; a vertex activates once
// the total weight of arcs from active in-neighbors reaches its threshold.
struct ThresholdNetwork {
    Digraph digraph;
    std::vector<double> tau;    // per-vertex threshold
    std::vector<Vertex> seed;   // initially active
};

struct ActivationResult {
    bool fully_activates = false;
    VertexOrder activation_order;  // valid one-by-one activation sequence
    std::vector<Vertex> blocked;   // self-blocking set when activation fails
};

// Decides full activation via the lower-bounded ordering problem on the
// reversed digraph (f = 0 on seeds, tau elsewhere).
ActivationResult check_activation(const ThresholdNetwork& net);

// Independent round-based fixpoint simulation of the same process.
bool simulate_activation(const ThresholdNetwork& net);

}  // namespace ordo

#endif
