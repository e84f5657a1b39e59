#include "ordo/applications.hpp"

#include <algorithm>

#include "ordo/bounded.hpp"

namespace ordo {

void RankingProfile::validate() const {
    if (num_candidates < 0) throw SpecError("negative candidate count");
    if (rankings.empty()) throw SpecError("at least one judge required");
    for (const auto& r : rankings) {
        if (static_cast<int>(r.size()) != num_candidates)
            throw SpecError("every ranking must list all candidates");
        std::vector<bool> seen(static_cast<size_t>(num_candidates), false);
        for (int c : r) {
            if (c < 0 || c >= num_candidates || seen[static_cast<size_t>(c)])
                throw SpecError("ranking is not a permutation of the candidates");
            seen[static_cast<size_t>(c)] = true;
        }
    }
}

namespace {

// before[u][v] = number of judges ranking u before v
std::vector<std::vector<int>> pairwise_counts(const RankingProfile& profile) {
    const size_t n = static_cast<size_t>(profile.num_candidates);
    std::vector<std::vector<int>> before(n, std::vector<int>(n, 0));
    for (const auto& r : profile.rankings) {
        std::vector<int> pos(n);
        for (size_t i = 0; i < n; ++i) pos[static_cast<size_t>(r[i])] = static_cast<int>(i);
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                if (u != v && pos[u] < pos[v]) ++before[u][v];
    }
    return before;
}

}  // namespace

Digraph build_penalty_digraph(const RankingProfile& profile) {
    profile.validate();
    const int n = profile.num_candidates;
    const int judges = static_cast<int>(profile.rankings.size());
    auto before = pairwise_counts(profile);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && 2 * before[static_cast<size_t>(u)][static_cast<size_t>(v)] > judges)
                arcs.push_back({u, v, 1.0});
    return Digraph(n, std::move(arcs));
}

UnfairnessResult minmax_unfairness_order(const RankingProfile& profile) {
    Digraph penalty = build_penalty_digraph(profile);
    auto [order, value] = solve_minmax(penalty, WeightMode::Unit);
    return {std::move(order), static_cast<int>(value)};
}

Digraph build_disappointment_digraph(const RankingProfile& profile) {
    profile.validate();
    const int n = profile.num_candidates;
    auto before = pairwise_counts(profile);
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && before[static_cast<size_t>(v)][static_cast<size_t>(u)] > 0)
                arcs.push_back(
                    {v, u, static_cast<double>(before[static_cast<size_t>(v)][static_cast<size_t>(u)])});
    return Digraph(n, std::move(arcs));
}

SolveResult bounded_disappointment_order(const RankingProfile& profile,
                                         const std::vector<double>& g) {
    Digraph w = build_disappointment_digraph(profile);
    return solve_upper(w, g, WeightMode::Arc);
}

ActivationResult check_activation(const ThresholdNetwork& net) {
    const int n = net.digraph.vertex_count();
    if (static_cast<int>(net.tau.size()) != n)
        throw SpecError("tau must have one entry per vertex");
    for (double t : net.tau)
        if (t < 0) throw SpecError("thresholds must be non-negative");
    std::vector<double> f(net.tau);
    std::vector<bool> seeded = make_membership(n, net.seed);
    for (Vertex v = 0; v < n; ++v)
        if (seeded[static_cast<size_t>(v)]) f[static_cast<size_t>(v)] = 0;

    // in the reversed digraph the weighted left-outdegree of v is the weight
    // of original in-arcs from already-activated vertices
    SolveResult r = solve_lower(net.digraph.reversed(), f, WeightMode::Arc);
    ActivationResult res;
    if (is_feasible(r)) {
        res.fully_activates = true;
        res.activation_order = feasible(r).order;
    } else {
        res.blocked = infeasible(r).witness->vertices;
    }
    return res;
}

bool simulate_activation(const ThresholdNetwork& net) {
    const int n = net.digraph.vertex_count();
    if (static_cast<int>(net.tau.size()) != n)
        throw SpecError("tau must have one entry per vertex");
    std::vector<bool> active = make_membership(n, net.seed);
    int active_count = 0;
    for (Vertex v = 0; v < n; ++v)
        if (active[static_cast<size_t>(v)]) ++active_count;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (active[static_cast<size_t>(v)]) continue;
            double support = 0;
            for (ArcId a : net.digraph.in_arcs(v))
                if (active[static_cast<size_t>(net.digraph.arc(a).tail)])
                    support += net.digraph.arc(a).weight;
            if (support >= net.tau[static_cast<size_t>(v)]) {
                active[static_cast<size_t>(v)] = true;
                ++active_count;
                changed = true;
            }
        }
    }
    return active_count == n;
}

}  // namespace ordo
