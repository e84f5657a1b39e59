#include "ordo/simultaneous.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace ordo {

namespace {

void check_size(const Digraph& d, size_t got, const char* name) {
    if (static_cast<int>(got) != d.vertex_count())
        throw SpecError(std::string(name) + " must have one entry per vertex");
}

std::vector<Vertex> remaining_vertices(const std::vector<bool>& remaining) {
    std::vector<Vertex> vs;
    for (size_t v = 0; v < remaining.size(); ++v)
        if (remaining[v]) vs.push_back(static_cast<Vertex>(v));
    return vs;
}

// Both greedies share one skeleton. The upper-bounded quantity is a degree
// into the remaining set (it shrinks), the lower-bounded one a degree against
// the fixed set (it grows), so qualification is monotone and the qualified
// pool only ever gains vertices.
//
//   right-to-left: delta(v, V'\{v}) <= upper,  rho(v, V\V') >= lower
//   left-to-right: rho(v, V'\{v})  <= upper,  delta(v, V\V') >= lower
SolveResult greedy_two_sided(const Digraph& d, const std::vector<double>& upper,
                             const std::vector<double>& lower, bool right_to_left) {
    const int n = d.vertex_count();
    std::vector<int> shrinking(static_cast<size_t>(n), 0);
    std::vector<int> growing(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        shrinking[static_cast<size_t>(v)] = right_to_left ? d.out_degree(v) : d.in_degree(v);

    auto qualified = [&](Vertex v) {
        size_t i = static_cast<size_t>(v);
        return shrinking[i] <= upper[i] && growing[i] >= lower[i];
    };

    std::vector<bool> remaining(static_cast<size_t>(n), true);
    std::vector<bool> pooled(static_cast<size_t>(n), false);
    std::set<Vertex> pool;
    auto offer = [&](Vertex v) {
        if (!pooled[static_cast<size_t>(v)] && qualified(v)) {
            pooled[static_cast<size_t>(v)] = true;
            pool.insert(v);
        }
    };
    for (Vertex v = 0; v < n; ++v) offer(v);

    VertexOrder order(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        if (pool.empty())
            return Infeasible{Witness::stuck_set(remaining_vertices(remaining)),
                              "every remaining vertex violates a qualification"};
        Vertex v = *pool.begin();
        pool.erase(pool.begin());
        remaining[static_cast<size_t>(v)] = false;
        order[static_cast<size_t>(right_to_left ? n - 1 - step : step)] = v;
        for (ArcId a : d.in_arcs(v)) {
            Vertex t = d.arc(a).tail;
            if (!remaining[static_cast<size_t>(t)]) continue;
            if (right_to_left)
                --shrinking[static_cast<size_t>(t)];  // t lost an out-neighbor in V'
            else
                ++growing[static_cast<size_t>(t)];  // t gained an out-neighbor in the fixed set
            offer(t);
        }
        for (ArcId a : d.out_arcs(v)) {
            Vertex h = d.arc(a).head;
            if (!remaining[static_cast<size_t>(h)]) continue;
            if (right_to_left)
                ++growing[static_cast<size_t>(h)];  // h gained an in-neighbor in the fixed set
            else
                --shrinking[static_cast<size_t>(h)];  // h lost an in-neighbor in V'
            offer(h);
        }
    }
    return make_feasible(d, std::move(order));
}

}  // namespace

SolveResult solve_out_upper_in_lower(const Digraph& d, const std::vector<double>& g_delta,
                                     const std::vector<double>& f_rho) {
    check_size(d, g_delta.size(), "g_delta");
    check_size(d, f_rho.size(), "f_rho");
    return greedy_two_sided(d, g_delta, f_rho, /*right_to_left=*/true);
}

SolveResult solve_out_lower_in_upper(const Digraph& d, const std::vector<double>& f_delta,
                                     const std::vector<double>& g_rho) {
    check_size(d, f_delta.size(), "f_delta");
    check_size(d, g_rho.size(), "g_rho");
    return greedy_two_sided(d, g_rho, f_delta, /*right_to_left=*/false);
}

SolveResult solve_exact(const Digraph& d, const std::vector<int>& m_delta,
                        const std::vector<int>& m_rho) {
    check_size(d, m_delta.size(), "m_delta");
    check_size(d, m_rho.size(), "m_rho");
    for (int m : m_delta)
        if (m < 0) throw SpecError("m_delta must be non-negative");
    for (int m : m_rho)
        if (m < 0) throw SpecError("m_rho must be non-negative");
    long long sd = std::accumulate(m_delta.begin(), m_delta.end(), 0ll);
    long long sr = std::accumulate(m_rho.begin(), m_rho.end(), 0ll);
    if (sd != sr) return Infeasible{Witness::sum_mismatch(sd, sr), "prescription sums differ"};

    std::vector<double> g(m_delta.begin(), m_delta.end());
    std::vector<double> f(m_rho.begin(), m_rho.end());
    SolveResult r = solve_out_upper_in_lower(d, g, f);
    if (!is_feasible(r)) return r;

    // the relaxation theorem guarantees the equalities; this is a pure
    // internal consistency assertion
    const DegreeProfile& p = feasible(r).profile;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (p.delta_left[i] != m_delta[i] || p.rho_right[i] != m_rho[i])
            throw std::logic_error("solve_exact: relaxation produced a non-exact order");
    }
    return r;
}

}  // namespace ordo
