#include "ordo/family.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ordo/bounded.hpp"
#include "ordo/simultaneous.hpp"

namespace ordo {

namespace {

// Decomposes an (out<=1, in<=1, acyclic) arc set into maximal dipaths and
// returns (start, end) per dipath with >= 1 arc.
std::vector<std::pair<Vertex, Vertex>> dipath_components(const Digraph& d,
                                                         const std::vector<ArcId>& arc_ids) {
    const size_t n = static_cast<size_t>(d.vertex_count());
    std::vector<Vertex> next(n, -1);
    std::vector<int> indeg(n, 0);
    for (ArcId a : arc_ids) {
        next[static_cast<size_t>(d.arc(a).tail)] = d.arc(a).head;
        ++indeg[static_cast<size_t>(d.arc(a).head)];
    }
    std::vector<std::pair<Vertex, Vertex>> paths;
    for (size_t v = 0; v < n; ++v) {
        if (indeg[v] != 0 || next[v] == -1) continue;  // starts have an out-arc, no in-arc
        Vertex end = static_cast<Vertex>(v);
        while (next[static_cast<size_t>(end)] != -1) end = next[static_cast<size_t>(end)];
        paths.emplace_back(static_cast<Vertex>(v), end);
    }
    return paths;
}

void validate_vertex_set(const Digraph& d, const std::vector<Vertex>& vs, const char* name) {
    std::vector<bool> seen(static_cast<size_t>(d.vertex_count()), false);
    for (Vertex v : vs) {
        if (v < 0 || v >= d.vertex_count())
            throw SpecError(std::string(name) + " contains an out-of-range vertex");
        if (seen[static_cast<size_t>(v)])
            throw SpecError(std::string(name) + " contains a repeated vertex");
        seen[static_cast<size_t>(v)] = true;
    }
}

}  // namespace

bool satisfies_family(const Digraph& d, const std::vector<ArcId>& arc_ids, const FamilyGoal& goal) {
    if (!classify_arc_set(d, arc_ids, goal.kind)) return false;
    switch (goal.kind) {
        case ArcFamilyKind::InBranching: {
            std::vector<bool> has_out(static_cast<size_t>(d.vertex_count()), false);
            for (ArcId a : arc_ids) has_out[static_cast<size_t>(d.arc(a).tail)] = true;
            for (Vertex r : goal.forced_roots)
                if (has_out[static_cast<size_t>(r)]) return false;
            return true;
        }
        case ArcFamilyKind::InArborescence: {
            if (!goal.root || d.vertex_count() <= 1) return true;
            std::vector<bool> has_out(static_cast<size_t>(d.vertex_count()), false);
            for (ArcId a : arc_ids) has_out[static_cast<size_t>(d.arc(a).tail)] = true;
            return !has_out[static_cast<size_t>(*goal.root)];
        }
        case ArcFamilyKind::HamiltonianDipath: {
            if (!goal.endpoints || d.vertex_count() <= 1) return true;
            auto paths = dipath_components(d, arc_ids);
            return paths.size() == 1 && paths[0].first == goal.endpoints->first &&
                   paths[0].second == goal.endpoints->second;
        }
        case ArcFamilyKind::DisjointDipaths: {
            if (goal.sources.empty() && !goal.count) return true;
            auto paths = dipath_components(d, arc_ids);
            if (goal.count && static_cast<int>(paths.size()) != *goal.count) return false;
            if (goal.sources.empty()) return true;
            if (paths.size() != goal.sources.size()) return false;
            std::vector<Vertex> starts, ends;
            for (auto [s, t] : paths) {
                starts.push_back(s);
                ends.push_back(t);
            }
            std::sort(starts.begin(), starts.end());
            std::sort(ends.begin(), ends.end());
            std::vector<Vertex> src = goal.sources, snk = goal.sinks;
            std::sort(src.begin(), src.end());
            std::sort(snk.begin(), snk.end());
            return starts == src && ends == snk;
        }
        default:
            return true;
    }
}

std::vector<ArcId> left_arcs(const Digraph& d, const VertexOrder& order) {
    std::vector<int> pos = order_positions(d, order);
    std::vector<ArcId> res;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (pos[static_cast<size_t>(d.arc(a).head)] < pos[static_cast<size_t>(d.arc(a).tail)])
            res.push_back(a);
    return res;
}

ArcPartition partition_from_order(const Digraph& d, const VertexOrder& order, ArcFamilyKind kind) {
    std::vector<ArcId> left = left_arcs(d, order);
    if (!classify_arc_set(d, left, kind))
        throw FamilyViolation("left-going arcs of the order do not form a " + to_string(kind));
    ArcPartition p;
    p.kind = kind;
    p.family_arcs = std::move(left);
    std::vector<bool> in_family(static_cast<size_t>(d.arc_count()), false);
    for (ArcId a : p.family_arcs) in_family[static_cast<size_t>(a)] = true;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (!in_family[static_cast<size_t>(a)]) p.acyclic_arcs.push_back(a);
    return p;
}

namespace {

FamilyOrderResult feasible_family_result(const Digraph& d, VertexOrder order, ArcFamilyKind kind) {
    ArcPartition part = partition_from_order(d, order, kind);
    FamilyOrderResult r;
    r.partition = std::move(part);
    r.result = make_feasible(d, std::move(order));
    return r;
}

}  // namespace

FamilyOrderResult order_in_branching(const Digraph& d, const std::vector<Vertex>& forced_roots) {
    validate_vertex_set(d, forced_roots, "roots");
    std::vector<double> g(static_cast<size_t>(d.vertex_count()), 1.0);
    for (Vertex r : forced_roots) g[static_cast<size_t>(r)] = 0.0;
    SolveResult r = solve_upper(d, g, WeightMode::Unit);
    if (!is_feasible(r)) return {std::move(r), std::nullopt};

    FamilyGoal goal;
    goal.kind = ArcFamilyKind::InBranching;
    goal.forced_roots = forced_roots;
    VertexOrder order = feasible(r).order;
    if (!satisfies_family(d, left_arcs(d, order), goal))
        throw std::logic_error("order_in_branching: left arcs are not a rooted in-branching");
    return feasible_family_result(d, std::move(order), ArcFamilyKind::InBranching);
}

FamilyOrderResult order_k_disjoint_st_dipaths(const Digraph& d, const DipathSystemSpec& spec) {
    validate_vertex_set(d, spec.sources, "S");
    validate_vertex_set(d, spec.sinks, "T");
    if (spec.sources.size() != spec.sinks.size()) throw SpecError("|S| != |T|");
    const int n = d.vertex_count();
    const int k = static_cast<int>(spec.sources.size());
    std::vector<bool> in_t = make_membership(n, spec.sinks);
    for (Vertex s : spec.sources)
        if (in_t[static_cast<size_t>(s)]) throw SpecError("S and T must be disjoint");

    std::vector<bool> remaining(static_cast<size_t>(n), true);
    std::vector<int> outdeg(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) outdeg[static_cast<size_t>(v)] = d.out_degree(v);
    std::set<Vertex> x_set(spec.sources.begin(), spec.sources.end());
    std::set<Vertex> y_set;

    VertexOrder order(static_cast<size_t>(n));
    auto remove_vertex = [&](Vertex v, int position) {
        remaining[static_cast<size_t>(v)] = false;
        order[static_cast<size_t>(position)] = v;
        for (ArcId a : d.in_arcs(v)) {
            Vertex t = d.arc(a).tail;
            if (remaining[static_cast<size_t>(t)]) --outdeg[static_cast<size_t>(t)];
        }
    };

    for (int i = n - 1; i >= 0; --i) {
        Vertex picked = -1;
        for (Vertex v : x_set)
            if (outdeg[static_cast<size_t>(v)] <= 1) {
                picked = v;
                break;
            }
        if (picked != -1) {
            Vertex v = picked;
            bool had_out = outdeg[static_cast<size_t>(v)] == 1;
            remove_vertex(v, i);
            x_set.erase(v);
            if (had_out) {
                Vertex u = -1;
                for (ArcId a : d.out_arcs(v))
                    if (remaining[static_cast<size_t>(d.arc(a).head)]) {
                        u = d.arc(a).head;
                        break;
                    }
                assert(u != -1);
                if (in_t[static_cast<size_t>(u)])
                    y_set.insert(u);
                else
                    x_set.insert(u);
            }
            if (static_cast<int>(x_set.size() + y_set.size()) <= k - 1) {
                std::vector<Vertex> cut(x_set.begin(), x_set.end());
                cut.insert(cut.end(), y_set.begin(), y_set.end());
                return {Infeasible{Witness::cut_set(std::move(cut), k),
                                   "fewer than k vertices meet every S-T dipath"},
                        std::nullopt};
            }
            continue;
        }
        // vertices outside (X u T) \ Y with no remaining out-arc
        for (Vertex v = 0; v < n; ++v) {
            if (!remaining[static_cast<size_t>(v)] || outdeg[static_cast<size_t>(v)] != 0) continue;
            if (x_set.count(v)) continue;
            if (in_t[static_cast<size_t>(v)] && !y_set.count(v)) continue;
            picked = v;
            break;
        }
        if (picked == -1) {
            std::vector<Vertex> stuck;
            for (Vertex v = 0; v < n; ++v)
                if (remaining[static_cast<size_t>(v)]) stuck.push_back(v);
            return {Infeasible{Witness::stuck_set(std::move(stuck), /*validated=*/true),
                               "certificate set: no vertex can close a dipath"},
                    std::nullopt};
        }
        remove_vertex(picked, i);
    }

    FamilyGoal goal;
    goal.kind = ArcFamilyKind::DisjointDipaths;
    goal.sources = spec.sources;
    goal.sinks = spec.sinks;
    if (!satisfies_family(d, left_arcs(d, order), goal))
        throw std::logic_error("order_k_disjoint_st_dipaths: left arcs are not k S-T dipaths");
    return feasible_family_result(d, std::move(order), ArcFamilyKind::DisjointDipaths);
}

FamilyOrderResult order_hamiltonian_dipath(const Digraph& d,
                                           std::optional<std::pair<Vertex, Vertex>> endpoints) {
    const int n = d.vertex_count();
    if (n <= 1) {
        if (endpoints) throw SpecError("endpoints require at least two vertices");
        VertexOrder order;
        if (n == 1) order.push_back(0);
        return feasible_family_result(d, std::move(order), ArcFamilyKind::HamiltonianDipath);
    }

    auto attempt = [&](Vertex s, Vertex t) -> std::optional<VertexOrder> {
        std::vector<int> m_delta(static_cast<size_t>(n), 1), m_rho(static_cast<size_t>(n), 1);
        m_delta[static_cast<size_t>(s)] = 1;
        m_delta[static_cast<size_t>(t)] = 0;
        m_rho[static_cast<size_t>(s)] = 0;
        m_rho[static_cast<size_t>(t)] = 1;
        SolveResult r = solve_exact(d, m_delta, m_rho);
        if (!is_feasible(r)) return std::nullopt;
        FamilyGoal goal;
        goal.kind = ArcFamilyKind::HamiltonianDipath;
        goal.endpoints = {s, t};
        VertexOrder order = feasible(r).order;
        if (!satisfies_family(d, left_arcs(d, order), goal))
            throw std::logic_error("order_hamiltonian_dipath: left arcs are not the s-t dipath");
        return order;
    };

    if (endpoints) {
        auto [s, t] = *endpoints;
        if (s == t) throw SpecError("endpoints must be distinct");
        if (s < 0 || s >= n || t < 0 || t >= n) throw SpecError("endpoint out of range");
        if (auto order = attempt(s, t))
            return feasible_family_result(d, std::move(*order), ArcFamilyKind::HamiltonianDipath);
        return {Infeasible{std::nullopt, "no order realizes a Hamiltonian s-t dipath"},
                std::nullopt};
    }
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = 0; t < n; ++t) {
            if (s == t) continue;
            if (auto order = attempt(s, t))
                return feasible_family_result(d, std::move(*order),
                                              ArcFamilyKind::HamiltonianDipath);
        }
    return {Infeasible{std::nullopt, "no endpoint pair admits a Hamiltonian dipath order"},
            std::nullopt};
}

FamilyOrderResult order_disjoint_dipaths_free_endpoints(const Digraph& d, int k, int cap) {
    const int n = d.vertex_count();
    if (k < 1) throw SpecError("k must be >= 1 (each dipath contains at least one arc)");
    if (2 * k > n) throw SpecError("need n >= 2k vertices for k disjoint dipaths");
    if (k > cap)
        throw CapExceeded("free-endpoint dipath cap exceeded (k = " + std::to_string(k) +
                          ", cap = " + std::to_string(cap) + ")");

    std::vector<Vertex> src(static_cast<size_t>(k)), snk(static_cast<size_t>(k));
    // lexicographic enumeration of k-subsets S, then disjoint k-subsets T
    auto rec_t = [&](auto&& self, int idx, Vertex from, const std::vector<bool>& in_s)
        -> std::optional<FamilyOrderResult> {
        if (idx == k) {
            DipathSystemSpec spec{src, snk};
            FamilyOrderResult r = order_k_disjoint_st_dipaths(d, spec);
            if (is_feasible(r.result)) return r;
            return std::nullopt;
        }
        for (Vertex v = from; v < n; ++v) {
            if (in_s[static_cast<size_t>(v)]) continue;
            snk[static_cast<size_t>(idx)] = v;
            if (auto r = self(self, idx + 1, v + 1, in_s)) return r;
        }
        return std::nullopt;
    };
    auto rec_s = [&](auto&& self, int idx, Vertex from) -> std::optional<FamilyOrderResult> {
        if (idx == k) {
            std::vector<bool> in_s = make_membership(n, src);
            return rec_t(rec_t, 0, 0, in_s);
        }
        for (Vertex v = from; v < n; ++v) {
            src[static_cast<size_t>(idx)] = v;
            if (auto r = self(self, idx + 1, v + 1)) return r;
        }
        return std::nullopt;
    };
    if (auto r = rec_s(rec_s, 0, 0)) return *r;
    return {Infeasible{std::nullopt, "no endpoint sets admit " + std::to_string(k) +
                                         " disjoint dipaths going left"},
            std::nullopt};
}

FamilyOrderResult order_in_arb_out_arb(const Digraph& d, std::optional<Vertex> root) {
    const int n = d.vertex_count();
    if (root && (*root < 0 || *root >= n)) throw SpecError("root out of range");

    auto attempt = [&](Vertex r) -> std::optional<VertexOrder> {
        std::vector<int> m_delta(static_cast<size_t>(n), 1), m_rho(static_cast<size_t>(n));
        m_delta[static_cast<size_t>(r)] = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (v == r) {
                m_rho[static_cast<size_t>(v)] = d.in_degree(v);
            } else {
                if (d.in_degree(v) == 0) return std::nullopt;  // rho_left(v) = 1 unreachable
                m_rho[static_cast<size_t>(v)] = d.in_degree(v) - 1;
            }
        }
        SolveResult sr = solve_exact(d, m_delta, m_rho);
        if (!is_feasible(sr)) return std::nullopt;
        VertexOrder order = feasible(sr).order;
        FamilyGoal in_goal;
        in_goal.kind = ArcFamilyKind::InArborescence;
        in_goal.root = r;
        std::vector<ArcId> left = left_arcs(d, order);
        if (!satisfies_family(d, left, in_goal)) return std::nullopt;
        // right-going arcs must form an r-out-arborescence: check as an
        // in-arborescence of the reversed digraph (arc ids coincide)
        Digraph rev = d.reversed();
        std::vector<bool> is_left(static_cast<size_t>(d.arc_count()), false);
        for (ArcId a : left) is_left[static_cast<size_t>(a)] = true;
        std::vector<ArcId> right;
        for (ArcId a = 0; a < d.arc_count(); ++a)
            if (!is_left[static_cast<size_t>(a)]) right.push_back(a);
        FamilyGoal out_goal;
        out_goal.kind = ArcFamilyKind::InArborescence;
        out_goal.root = r;
        if (!satisfies_family(rev, right, out_goal)) return std::nullopt;
        return order;
    };

    if (root) {
        if (auto order = attempt(*root))
            return feasible_family_result(d, std::move(*order), ArcFamilyKind::InArborescence);
        return {Infeasible{std::nullopt,
                           "no order splits into an r-in-arborescence and r-out-arborescence"},
                std::nullopt};
    }
    for (Vertex r = 0; r < n; ++r)
        if (auto order = attempt(r))
            return feasible_family_result(d, std::move(*order), ArcFamilyKind::InArborescence);
    return {Infeasible{std::nullopt,
                       "no root admits an in-arborescence / out-arborescence split"},
            std::nullopt};
}

bool check_cut_set(const Digraph& d, const std::vector<Vertex>& cut, int k,
                   const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks) {
    if (static_cast<int>(cut.size()) >= k) return false;
    std::vector<bool> blocked = make_membership(d.vertex_count(), cut);
    // any S-T dipath avoiding the cut disproves the certificate; a dipath
    // counts as met when it contains a cut vertex, endpoints included
    std::vector<bool> reach(static_cast<size_t>(d.vertex_count()), false);
    std::vector<Vertex> stack;
    for (Vertex s : sources)
        if (!blocked[static_cast<size_t>(s)] && !reach[static_cast<size_t>(s)]) {
            reach[static_cast<size_t>(s)] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (ArcId a : d.out_arcs(v)) {
            Vertex h = d.arc(a).head;
            if (blocked[static_cast<size_t>(h)] || reach[static_cast<size_t>(h)]) continue;
            reach[static_cast<size_t>(h)] = true;
            stack.push_back(h);
        }
    }
    for (Vertex t : sinks)
        if (!blocked[static_cast<size_t>(t)] && reach[static_cast<size_t>(t)]) return false;
    return true;
}

bool is_minimal_feedback_arc_set(const Digraph& d, const std::vector<ArcId>& arcs) {
    std::vector<bool> in_set(static_cast<size_t>(d.arc_count()), false);
    for (ArcId a : arcs) {
        if (a < 0 || a >= d.arc_count()) throw SpecError("arc id out of range");
        in_set[static_cast<size_t>(a)] = true;
    }
    std::vector<ArcId> rest;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (!in_set[static_cast<size_t>(a)]) rest.push_back(a);
    if (!classify_arc_set(d, rest, ArcFamilyKind::Acyclic)) return false;
    // reachability head -> tail within the remainder certifies a cycle
    // covered by this arc alone
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(d.vertex_count()));
    for (ArcId a : rest) adj[static_cast<size_t>(d.arc(a).tail)].push_back(d.arc(a).head);
    auto reaches = [&](Vertex from, Vertex to) {
        std::vector<bool> vis(static_cast<size_t>(d.vertex_count()), false);
        std::vector<Vertex> stack{from};
        vis[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (Vertex h : adj[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(h)]) {
                    vis[static_cast<size_t>(h)] = true;
                    stack.push_back(h);
                }
        }
        return false;
    };
    for (ArcId a : arcs)
        if (!reaches(d.arc(a).head, d.arc(a).tail)) return false;
    return true;
}

std::optional<VertexOrder> order_from_feedback_arcs(const Digraph& d,
                                                    const std::vector<ArcId>& arcs) {
    std::vector<bool> in_set(static_cast<size_t>(d.arc_count()), false);
    for (ArcId a : arcs) {
        if (a < 0 || a >= d.arc_count()) throw SpecError("arc id out of range");
        in_set[static_cast<size_t>(a)] = true;
    }
    std::vector<Arc> flipped = d.arcs();
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (in_set[static_cast<size_t>(a)])
            std::swap(flipped[static_cast<size_t>(a)].tail, flipped[static_cast<size_t>(a)].head);
    Digraph rev(d.vertex_count(), std::move(flipped));
    auto topo = topological_order(rev);
    if (!std::holds_alternative<VertexOrder>(topo)) return std::nullopt;
    VertexOrder order = std::get<VertexOrder>(topo);
    std::vector<ArcId> left = left_arcs(d, order);
    std::vector<ArcId> want(arcs);
    std::sort(want.begin(), want.end());
    if (left != want) return std::nullopt;
    return order;
}

bool check_st_stuck_set(const Digraph& d, const std::vector<Vertex>& stuck,
                        const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks) {
    const int n = d.vertex_count();
    std::vector<bool> in_vp = make_membership(n, stuck);
    std::vector<bool> in_s = make_membership(n, sources);
    std::vector<bool> in_t = make_membership(n, sinks);
    std::vector<bool> outside(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) outside[static_cast<size_t>(v)] = !in_vp[static_cast<size_t>(v)];

    for (Vertex v : stuck) {
        size_t i = static_cast<size_t>(v);
        int d_in = outdegree_count_into(d, v, in_vp);
        int r_out = indegree_count_from(d, v, outside);
        if (in_s[i]) {
            if (d_in < 2) return false;  // (1)
        } else if (in_t[i]) {
            if (r_out >= 1 && d_in < 1) return false;  // (2)
        } else {
            if (d_in < 1) return false;                // (3)
            if (r_out >= 1 && d_in < 2) return false;  // (4)
        }
    }
    return true;
}

}  // namespace ordo
