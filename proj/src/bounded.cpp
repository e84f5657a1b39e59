#include "ordo/bounded.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_set>

namespace ordo {

namespace {

double arc_weight(const Digraph& d, ArcId a, WeightMode mode) {
    return mode == WeightMode::Arc ? d.arc(a).weight : 1.0;
}

void check_nonnegative_weights(const Digraph& d, WeightMode mode) {
    if (mode == WeightMode::Arc && d.has_negative_weight())
        throw SpecError("greedy bounded-ordering solvers require arc weights in [0, +inf]");
}

void check_bounds_size(const Digraph& d, const std::vector<double>& b, const char* name) {
    if (static_cast<int>(b.size()) != d.vertex_count())
        throw SpecError(std::string(name) + " must have one entry per vertex");
}

// Weighted outdegree split into a finite part and a count of +inf arcs, so
// that removing an infinite arc never produces inf - inf.
struct OutdegTracker {
    std::vector<double> fin;
    std::vector<int> infs;

    explicit OutdegTracker(int n) : fin(static_cast<size_t>(n), 0.0), infs(static_cast<size_t>(n), 0) {}
    void add(Vertex v, double w) {
        if (w == pos_inf)
            ++infs[static_cast<size_t>(v)];
        else
            fin[static_cast<size_t>(v)] += w;
    }
    void sub(Vertex v, double w) {
        if (w == pos_inf)
            --infs[static_cast<size_t>(v)];
        else
            fin[static_cast<size_t>(v)] -= w;
    }
    double value(Vertex v) const {
        return infs[static_cast<size_t>(v)] > 0 ? pos_inf : fin[static_cast<size_t>(v)];
    }
};

std::vector<Vertex> remaining_vertices(const std::vector<bool>& remaining) {
    std::vector<Vertex> vs;
    for (size_t v = 0; v < remaining.size(); ++v)
        if (remaining[v]) vs.push_back(static_cast<Vertex>(v));
    return vs;
}

// Shared right-to-left greedy: fixes any remaining vertex whose outdegree
// into the remaining set is <= g, optionally gated by an extra structural
// predicate (precedence). Qualification is monotone, so a qualified pool
// keyed by tie-break rank stays valid.
SolveResult greedy_upper(const Digraph& d, const std::vector<double>& g, WeightMode mode,
                         const TieBreak* tie, const std::vector<int>* succ_remaining_init,
                         const std::vector<std::vector<Vertex>>* prec_preds,
                         WitnessKind infeasible_kind) {
    const int n = d.vertex_count();
    check_bounds_size(d, g, "g");
    check_nonnegative_weights(d, mode);

    OutdegTracker out(n);
    for (Vertex v = 0; v < n; ++v)
        for (ArcId a : d.out_arcs(v)) out.add(v, arc_weight(d, a, mode));

    std::vector<int> succ_remaining =
        succ_remaining_init ? *succ_remaining_init : std::vector<int>(static_cast<size_t>(n), 0);
    auto rank = [&](Vertex v) { return tie ? (*tie)[static_cast<size_t>(v)] : v; };
    auto qualified = [&](Vertex v) {
        return succ_remaining[static_cast<size_t>(v)] == 0 && out.value(v) <= g[static_cast<size_t>(v)];
    };

    std::vector<bool> remaining(static_cast<size_t>(n), true);
    std::vector<bool> pooled(static_cast<size_t>(n), false);
    std::set<std::pair<int, Vertex>> pool;
    auto offer = [&](Vertex v) {
        if (!pooled[static_cast<size_t>(v)] && qualified(v)) {
            pooled[static_cast<size_t>(v)] = true;
            pool.emplace(rank(v), v);
        }
    };
    for (Vertex v = 0; v < n; ++v) offer(v);

    VertexOrder order(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        if (pool.empty()) {
            Witness w = infeasible_kind == WitnessKind::InducedSet
                            ? Witness::induced_set(remaining_vertices(remaining))
                            : Witness::stuck_set(remaining_vertices(remaining));
            return Infeasible{std::move(w), ""};
        }
        Vertex v = pool.begin()->second;
        pool.erase(pool.begin());
        remaining[static_cast<size_t>(v)] = false;
        order[static_cast<size_t>(i)] = v;
        for (ArcId a : d.in_arcs(v)) {
            Vertex t = d.arc(a).tail;
            if (!remaining[static_cast<size_t>(t)]) continue;
            out.sub(t, arc_weight(d, a, mode));
            offer(t);
        }
        if (prec_preds)
            for (Vertex u : (*prec_preds)[static_cast<size_t>(v)]) {
                if (!remaining[static_cast<size_t>(u)]) continue;
                --succ_remaining[static_cast<size_t>(u)];
                offer(u);
            }
    }
    return make_feasible(d, std::move(order));
}

}  // namespace

SolveResult solve_upper(const Digraph& d, const std::vector<double>& g, WeightMode mode,
                        const TieBreak* tie) {
    return greedy_upper(d, g, mode, tie, nullptr, nullptr, WitnessKind::InducedSet);
}

SolveResult solve_lower(const Digraph& d, const std::vector<double>& f, WeightMode mode,
                        const TieBreak* tie) {
    const int n = d.vertex_count();
    check_bounds_size(d, f, "f");
    check_nonnegative_weights(d, mode);

    // outdegree into the fixed (left) set, which only grows
    OutdegTracker out(n);
    auto rank = [&](Vertex v) { return tie ? (*tie)[static_cast<size_t>(v)] : v; };
    auto qualified = [&](Vertex v) { return out.value(v) >= f[static_cast<size_t>(v)]; };

    std::vector<bool> remaining(static_cast<size_t>(n), true);
    std::vector<bool> pooled(static_cast<size_t>(n), false);
    std::set<std::pair<int, Vertex>> pool;
    auto offer = [&](Vertex v) {
        if (!pooled[static_cast<size_t>(v)] && qualified(v)) {
            pooled[static_cast<size_t>(v)] = true;
            pool.emplace(rank(v), v);
        }
    };
    for (Vertex v = 0; v < n; ++v) offer(v);

    VertexOrder order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (pool.empty())
            return Infeasible{Witness::induced_set(remaining_vertices(remaining)), ""};
        Vertex v = pool.begin()->second;
        pool.erase(pool.begin());
        remaining[static_cast<size_t>(v)] = false;
        order[static_cast<size_t>(i)] = v;
        for (ArcId a : d.in_arcs(v)) {
            Vertex t = d.arc(a).tail;
            if (!remaining[static_cast<size_t>(t)]) continue;
            out.add(t, arc_weight(d, a, mode));
            offer(t);
        }
    }
    return make_feasible(d, std::move(order));
}

std::pair<VertexOrder, double> solve_minmax(const Digraph& d, WeightMode mode) {
    const int n = d.vertex_count();
    check_nonnegative_weights(d, mode);
    OutdegTracker out(n);
    for (Vertex v = 0; v < n; ++v)
        for (ArcId a : d.out_arcs(v)) out.add(v, arc_weight(d, a, mode));

    std::vector<bool> remaining(static_cast<size_t>(n), true);
    VertexOrder order(static_cast<size_t>(n));
    double value = 0;
    for (int i = n - 1; i >= 0; --i) {
        Vertex best = -1;
        double best_val = pos_inf;
        for (Vertex v = 0; v < n; ++v) {
            if (!remaining[static_cast<size_t>(v)]) continue;
            double val = out.value(v);
            if (best == -1 || val < best_val) {
                best = v;
                best_val = val;
            }
        }
        remaining[static_cast<size_t>(best)] = false;
        order[static_cast<size_t>(i)] = best;
        value = std::max(value, best_val);
        for (ArcId a : d.in_arcs(best)) {
            Vertex t = d.arc(a).tail;
            if (remaining[static_cast<size_t>(t)]) out.sub(t, arc_weight(d, a, mode));
        }
    }
    return {std::move(order), value};
}

SolveResult solve_upper_with_precedence(const Digraph& d, const std::vector<double>& g,
                                        const std::vector<std::pair<Vertex, Vertex>>& prec,
                                        WeightMode mode) {
    const int n = d.vertex_count();
    std::vector<int> succ_remaining(static_cast<size_t>(n), 0);
    std::vector<std::vector<Vertex>> preds(static_cast<size_t>(n));
    std::vector<std::vector<Vertex>> succs(static_cast<size_t>(n));
    for (auto [u, v] : prec) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw SpecError("precedence pair out of range");
        if (u == v) throw SpecError("precedence pair must relate distinct vertices");
        ++succ_remaining[static_cast<size_t>(u)];
        preds[static_cast<size_t>(v)].push_back(u);
        succs[static_cast<size_t>(u)].push_back(v);
    }
    // reject cyclic precedence up front
    {
        std::vector<int> indeg(static_cast<size_t>(n), 0);
        for (auto& [u, v] : prec) ++indeg[static_cast<size_t>(v)];
        std::vector<Vertex> stack;
        for (Vertex v = 0; v < n; ++v)
            if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
        int done = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++done;
            for (Vertex w : succs[static_cast<size_t>(v)])
                if (--indeg[static_cast<size_t>(w)] == 0) stack.push_back(w);
        }
        if (done != n) throw SpecError("precedence cycle");
    }
    return greedy_upper(d, g, mode, nullptr, &succ_remaining, &preds, WitnessKind::StuckSet);
}

SolveResult solve_mixed_per_vertex(const Digraph& d, const BoundSpec& spec, WeightMode mode) {
    const int n = d.vertex_count();
    check_bounds_size(d, spec.f, "f");
    check_bounds_size(d, spec.g, "g");
    check_nonnegative_weights(d, mode);
    if (n > 64) throw CapExceeded("mixed-bound exact search supports at most 64 vertices");

    std::vector<bool> has_upper(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        bool lower = spec.f[static_cast<size_t>(v)] > neg_inf;
        bool upper = spec.g[static_cast<size_t>(v)] < pos_inf;
        if (lower == upper)
            throw SpecError("mixed spec: vertex " + std::to_string(v) +
                            " must carry exactly one of f/g");
        has_upper[static_cast<size_t>(v)] = upper;
    }

    const uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
    std::unordered_set<uint64_t> failed;
    VertexOrder order(static_cast<size_t>(n));
    uint64_t last_stuck = full;

    // outdegree of v into the remaining set
    auto outdeg_into_mask = [&](Vertex v, uint64_t mask) {
        int infs = 0;
        double fin = 0;
        for (ArcId a : d.out_arcs(v)) {
            Vertex h = d.arc(a).head;
            if (!(mask >> h & 1)) continue;
            double w = arc_weight(d, a, mode);
            if (w == pos_inf)
                ++infs;
            else
                fin += w;
        }
        return infs > 0 ? pos_inf : fin;
    };

    auto solve = [&](auto&& self, uint64_t mask, int pos) -> bool {
        if (mask == 0) return true;
        if (failed.count(mask)) return false;
        bool any = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            double val = outdeg_into_mask(v, mask);
            bool ok = has_upper[static_cast<size_t>(v)] ? val <= spec.g[static_cast<size_t>(v)]
                                                        : val >= spec.f[static_cast<size_t>(v)];
            if (!ok) continue;
            any = true;
            if (self(self, mask & ~(1ull << v), pos - 1)) {
                order[static_cast<size_t>(pos)] = v;
                return true;
            }
        }
        if (!any) last_stuck = mask;
        failed.insert(mask);
        return false;
    };

    if (solve(solve, full, n - 1)) return make_feasible(d, std::move(order));
    std::vector<Vertex> stuck;
    for (Vertex v = 0; v < n; ++v)
        if (last_stuck >> v & 1) stuck.push_back(v);
    return Infeasible{Witness::stuck_set(std::move(stuck)), "exact search exhausted"};
}

std::vector<double> d_distance_window_degrees(const Digraph& d, const VertexOrder& order, int dist,
                                              WeightMode mode) {
    const std::vector<int> pos = order_positions(d, order);
    const int n = d.vertex_count();
    std::vector<double> fin(static_cast<size_t>(n), 0.0);
    std::vector<int> infs(static_cast<size_t>(n), 0);
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        Vertex t = d.arc(a).tail, h = d.arc(a).head;
        int pt = pos[static_cast<size_t>(t)], ph = pos[static_cast<size_t>(h)];
        if (ph < pt && pt - ph <= dist) {
            double w = arc_weight(d, a, mode);
            if (w == pos_inf)
                ++infs[static_cast<size_t>(t)];
            else
                fin[static_cast<size_t>(t)] += w;
        }
    }
    std::vector<double> res(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        res[static_cast<size_t>(v)] = infs[static_cast<size_t>(v)] > 0 ? pos_inf : fin[static_cast<size_t>(v)];
    return res;
}

namespace {

// Subtract a weighted degree from an upper bound, saturating so that an
// infinite bound stays infinite and an infinite degree kills a finite bound.
double reduce_upper_bound(double g, double used) {
    if (g == pos_inf) return pos_inf;
    if (used == pos_inf) return neg_inf;
    return g - used;
}

}  // namespace

SolveResult solve_d_distance_large(const Digraph& d, const std::vector<double>& g, int k, int cap,
                                   WeightMode mode) {
    const int n = d.vertex_count();
    check_bounds_size(d, g, "g");
    check_nonnegative_weights(d, mode);
    if (k < 0 || 2 * k > n) throw SpecError("d-distance requires 0 <= 2k <= n");
    if (k > cap) throw CapExceeded("d-distance end-fixing cap exceeded (k = " + std::to_string(k) +
                                   ", cap = " + std::to_string(cap) + ")");
    if (k == 0) return solve_upper(d, g, mode);

    const int dist = n - k;
    // outdegree of v into a vertex set, with inf handling
    auto wdeg_into = [&](Vertex v, const std::vector<bool>& in_set) {
        int infs = 0;
        double fin = 0;
        for (ArcId a : d.out_arcs(v)) {
            if (!in_set[static_cast<size_t>(d.arc(a).head)]) continue;
            double w = arc_weight(d, a, mode);
            if (w == pos_inf)
                ++infs;
            else
                fin += w;
        }
        return infs > 0 ? pos_inf : fin;
    };

    std::vector<Vertex> tuple;  // first k vertices then last k vertices, in position order
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::optional<VertexOrder> found;

    auto try_complete = [&]() -> bool {
        // first-k constraints were checked during enumeration
        std::vector<Vertex> middle;
        for (Vertex v = 0; v < n; ++v)
            if (!used[static_cast<size_t>(v)]) middle.push_back(v);

        // last-k vertex at position n-k+j (1-based, j = 1..k) sees the window
        // of positions j .. n-k+j-1: firsts j..k, all of the middle, and the
        // preceding lasts
        std::vector<bool> window(static_cast<size_t>(n), false);
        for (Vertex v : middle) window[static_cast<size_t>(v)] = true;
        for (int idx = 0; idx < k; ++idx) window[static_cast<size_t>(tuple[static_cast<size_t>(idx)])] = true;
        for (int j = 1; j <= k; ++j) {
            // drop first_{j-1} from the window (position j-1 < j)
            if (j >= 2) window[static_cast<size_t>(tuple[static_cast<size_t>(j - 2)])] = false;
            Vertex v = tuple[static_cast<size_t>(k + j - 1)];
            if (wdeg_into(v, window) > g[static_cast<size_t>(v)]) return false;
            window[static_cast<size_t>(v)] = true;
        }

        // reduced one-sided problem on the middle: every middle vertex sees
        // all of its predecessors, so fold arcs into the fixed first block
        // into the bound
        std::vector<bool> first_set(static_cast<size_t>(n), false);
        for (int idx = 0; idx < k; ++idx) first_set[static_cast<size_t>(tuple[static_cast<size_t>(idx)])] = true;
        const int nm = static_cast<int>(middle.size());
        std::vector<int> local(static_cast<size_t>(n), -1);
        for (int i = 0; i < nm; ++i) local[static_cast<size_t>(middle[static_cast<size_t>(i)])] = i;
        std::vector<Arc> sub_arcs;
        for (const Arc& a : d.arcs()) {
            int lt = local[static_cast<size_t>(a.tail)], lh = local[static_cast<size_t>(a.head)];
            if (lt >= 0 && lh >= 0)
                sub_arcs.push_back({lt, lh, mode == WeightMode::Arc ? a.weight : 1.0});
        }
        Digraph sub(nm, std::move(sub_arcs));
        std::vector<double> sub_g(static_cast<size_t>(nm));
        for (int i = 0; i < nm; ++i) {
            Vertex v = middle[static_cast<size_t>(i)];
            double gp = reduce_upper_bound(g[static_cast<size_t>(v)], wdeg_into(v, first_set));
            if (gp == neg_inf) return false;
            sub_g[static_cast<size_t>(i)] = gp;
        }
        SolveResult sr = solve_upper(sub, sub_g, WeightMode::Arc);
        if (!is_feasible(sr)) return false;

        VertexOrder full(static_cast<size_t>(n));
        for (int i = 0; i < k; ++i) full[static_cast<size_t>(i)] = tuple[static_cast<size_t>(i)];
        const VertexOrder& mid = feasible(sr).order;
        for (int i = 0; i < nm; ++i)
            full[static_cast<size_t>(k + i)] = middle[static_cast<size_t>(mid[static_cast<size_t>(i)])];
        for (int j = 0; j < k; ++j)
            full[static_cast<size_t>(n - k + j)] = tuple[static_cast<size_t>(k + j)];
        found = std::move(full);
        return true;
    };

    // enumerate ordered fixings lexicographically; first feasible wins
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == 2 * k) return try_complete();
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (depth < k) {
                // first-k vertex at position depth+1: window is the fixed prefix
                std::vector<bool> prefix(static_cast<size_t>(n), false);
                for (int i = 0; i < depth; ++i) prefix[static_cast<size_t>(tuple[static_cast<size_t>(i)])] = true;
                if (wdeg_into(v, prefix) > g[static_cast<size_t>(v)]) continue;
            }
            used[static_cast<size_t>(v)] = true;
            tuple.push_back(v);
            if (self(self, depth + 1)) return true;
            tuple.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
        return false;
    };

    if (rec(rec, 0)) {
        VertexOrder order = std::move(*found);
        std::vector<double> win = d_distance_window_degrees(d, order, dist, mode);
        for (Vertex v = 0; v < n; ++v)
            if (win[static_cast<size_t>(v)] > g[static_cast<size_t>(v)])
                throw std::logic_error("d-distance: assembled order violates a window bound");
        return make_feasible(d, std::move(order));
    }
    std::vector<Vertex> all(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    return Infeasible{Witness::stuck_set(std::move(all)),
                      "all end fixings exhausted; no compact witness for d-distance"};
}

InArbsResult solve_k_arc_disjoint_in_arbs(const Digraph& d, Vertex root, int k) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw SpecError("root out of range");
    if (k < 1) throw SpecError("k must be >= 1");
    std::vector<double> f(static_cast<size_t>(n), static_cast<double>(k));
    f[static_cast<size_t>(root)] = 0;
    SolveResult r = solve_lower(d, f, WeightMode::Unit);
    if (!is_feasible(r) || k != 1) return {std::move(r), std::nullopt};

    const Feasible& fe = feasible(r);
    std::vector<int> pos = order_positions(d, fe.order);
    std::vector<ArcId> arb;
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        ArcId pick = -1;
        for (ArcId a : d.out_arcs(v))
            if (pos[static_cast<size_t>(d.arc(a).head)] < pos[static_cast<size_t>(v)]) {
                pick = a;
                break;
            }
        if (pick == -1) throw std::logic_error("in-arb extraction: vertex without a left arc");
        arb.push_back(pick);
    }
    if (!classify_arc_set(d, arb, ArcFamilyKind::InArborescence))
        throw std::logic_error("in-arb extraction: picked arcs are not an in-arborescence");
    return {std::move(r), std::move(arb)};
}

}  // namespace ordo
