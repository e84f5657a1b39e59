#include "ordo/digraph.hpp"

#include <algorithm>
#include <cmath>

namespace ordo {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw SpecError("vertex count must be non-negative");
    out_.resize(static_cast<size_t>(n));
    in_.resize(static_cast<size_t>(n));
    for (size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw SpecError("arc " + std::to_string(i) + ": endpoint out of range");
        if (a.tail == a.head)
            throw SpecError("arc " + std::to_string(i) + ": loops are not allowed");
        if (std::isnan(a.weight) || a.weight == neg_inf)
            throw SpecError("arc " + std::to_string(i) + ": weight must be a real number or inf");
        if (a.weight < 0) has_negative_weight_ = true;
        out_[static_cast<size_t>(a.tail)].push_back(static_cast<ArcId>(i));
        in_[static_cast<size_t>(a.head)].push_back(static_cast<ArcId>(i));
    }
}

double Digraph::weighted_out_degree(Vertex v) const {
    double s = 0;
    for (ArcId a : out_arcs(v)) s += arcs_[static_cast<size_t>(a)].weight;
    return s;
}

Digraph Digraph::reversed() const {
    std::vector<Arc> rev = arcs_;
    for (Arc& a : rev) std::swap(a.tail, a.head);
    return Digraph(n_, std::move(rev));
}

std::string to_string(ArcFamilyKind kind) {
    switch (kind) {
        case ArcFamilyKind::InBranching: return "in-branching";
        case ArcFamilyKind::InArborescence: return "in-arborescence";
        case ArcFamilyKind::Matching: return "matching";
        case ArcFamilyKind::PerfectMatching: return "perfect-matching";
        case ArcFamilyKind::DisjointDipaths: return "disjoint-dipaths";
        case ArcFamilyKind::Dipath: return "dipath";
        case ArcFamilyKind::HamiltonianDipath: return "hamiltonian-dipath";
        case ArcFamilyKind::Acyclic: return "acyclic";
    }
    return "?";
}

std::optional<ArcFamilyKind> arc_family_kind_from_string(const std::string& name) {
    for (ArcFamilyKind k :
         {ArcFamilyKind::InBranching, ArcFamilyKind::InArborescence, ArcFamilyKind::Matching,
          ArcFamilyKind::PerfectMatching, ArcFamilyKind::DisjointDipaths, ArcFamilyKind::Dipath,
          ArcFamilyKind::HamiltonianDipath, ArcFamilyKind::Acyclic})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

std::vector<int> order_positions(const Digraph& d, const VertexOrder& order) {
    const int n = d.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw SpecError("order length " + std::to_string(order.size()) + " != vertex count " +
                        std::to_string(n));
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        if (v < 0 || v >= n) throw SpecError("order contains out-of-range id");
        if (pos[static_cast<size_t>(v)] != -1) throw SpecError("order is not a permutation");
        pos[static_cast<size_t>(v)] = i;
    }
    return pos;
}

DegreeProfile degree_profile(const Digraph& d, const VertexOrder& order) {
    const std::vector<int> pos = order_positions(d, order);
    const size_t n = static_cast<size_t>(d.vertex_count());
    DegreeProfile p;
    p.delta_left.assign(n, 0);
    p.delta_right.assign(n, 0);
    p.rho_left.assign(n, 0);
    p.rho_right.assign(n, 0);
    p.delta_left_w.assign(n, 0.0);
    p.rho_right_w.assign(n, 0.0);
    for (const Arc& a : d.arcs()) {
        if (pos[static_cast<size_t>(a.head)] < pos[static_cast<size_t>(a.tail)]) {
            ++p.delta_left[static_cast<size_t>(a.tail)];
            ++p.rho_right[static_cast<size_t>(a.head)];
            p.delta_left_w[static_cast<size_t>(a.tail)] += a.weight;
            p.rho_right_w[static_cast<size_t>(a.head)] += a.weight;
        } else {
            ++p.delta_right[static_cast<size_t>(a.tail)];
            ++p.rho_left[static_cast<size_t>(a.head)];
        }
    }
    return p;
}

namespace {

// Peels zero-outdegree vertices right to left, lowest id first; on failure
// the remaining subgraph has min outdegree >= 1 and yields a cycle.
std::variant<VertexOrder, CycleWitness> peel(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> outdeg(static_cast<size_t>(n));
    std::vector<bool> removed(static_cast<size_t>(n), false);
    // min-heap of candidates by id, lazy deletion
    std::vector<Vertex> heap;
    auto cmp = std::greater<Vertex>();
    for (Vertex v = 0; v < n; ++v) {
        outdeg[static_cast<size_t>(v)] = d.out_degree(v);
        if (outdeg[static_cast<size_t>(v)] == 0) heap.push_back(v);
    }
    std::make_heap(heap.begin(), heap.end(), cmp);
    VertexOrder order(static_cast<size_t>(n));
    int filled = 0;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Vertex v = heap.back();
        heap.pop_back();
        if (removed[static_cast<size_t>(v)]) continue;
        removed[static_cast<size_t>(v)] = true;
        order[static_cast<size_t>(n - 1 - filled)] = v;
        ++filled;
        for (ArcId a : d.in_arcs(v)) {
            Vertex t = d.arc(a).tail;
            if (removed[static_cast<size_t>(t)]) continue;
            if (--outdeg[static_cast<size_t>(t)] == 0) {
                heap.push_back(t);
                std::push_heap(heap.begin(), heap.end(), cmp);
            }
        }
    }
    if (filled == n) return order;

    // every remaining vertex has an out-arc to a remaining vertex
    Vertex start = 0;
    while (removed[static_cast<size_t>(start)]) ++start;
    std::vector<ArcId> via(static_cast<size_t>(n), -1);
    std::vector<int> seen(static_cast<size_t>(n), -1);
    Vertex cur = start;
    int step = 0;
    while (seen[static_cast<size_t>(cur)] == -1) {
        seen[static_cast<size_t>(cur)] = step++;
        ArcId chosen = -1;
        for (ArcId a : d.out_arcs(cur))
            if (!removed[static_cast<size_t>(d.arc(a).head)]) {
                chosen = a;
                break;
            }
        via[static_cast<size_t>(cur)] = chosen;
        cur = d.arc(chosen).head;
    }
    CycleWitness w;
    Vertex v = cur;
    do {
        ArcId a = via[static_cast<size_t>(v)];
        w.arcs.push_back(a);
        v = d.arc(a).head;
    } while (v != cur);
    return w;
}

}  // namespace

bool is_acyclic(const Digraph& d) {
    return std::holds_alternative<VertexOrder>(peel(d));
}

std::variant<VertexOrder, CycleWitness> topological_order(const Digraph& d) {
    return peel(d);
}

namespace {

void check_arc_ids(const Digraph& d, const std::vector<ArcId>& arc_ids) {
    for (ArcId a : arc_ids)
        if (a < 0 || a >= d.arc_count()) throw SpecError("arc id out of range");
}

// Acyclicity of the sub-multidigraph on the given arcs.
bool arcs_acyclic(const Digraph& d, const std::vector<ArcId>& arc_ids) {
    const size_t n = static_cast<size_t>(d.vertex_count());
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<int> indeg(n, 0);
    for (ArcId a : arc_ids) {
        adj[static_cast<size_t>(d.arc(a).tail)].push_back(d.arc(a).head);
        ++indeg[static_cast<size_t>(d.arc(a).head)];
    }
    std::vector<Vertex> stack;
    for (size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(static_cast<Vertex>(v));
    size_t done = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++done;
        for (Vertex h : adj[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(h)] == 0) stack.push_back(h);
    }
    return done == n;
}

}  // namespace

bool classify_arc_set(const Digraph& d, const std::vector<ArcId>& arc_ids, ArcFamilyKind kind) {
    check_arc_ids(d, arc_ids);
    const int n = d.vertex_count();
    std::vector<int> outdeg(static_cast<size_t>(n), 0);
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    std::vector<int> touched(static_cast<size_t>(n), 0);
    for (ArcId a : arc_ids) {
        ++outdeg[static_cast<size_t>(d.arc(a).tail)];
        ++indeg[static_cast<size_t>(d.arc(a).head)];
        ++touched[static_cast<size_t>(d.arc(a).tail)];
        ++touched[static_cast<size_t>(d.arc(a).head)];
    }
    const int m = static_cast<int>(arc_ids.size());
    auto all_out_le = [&](int k) {
        return std::all_of(outdeg.begin(), outdeg.end(), [&](int x) { return x <= k; });
    };
    auto all_in_le = [&](int k) {
        return std::all_of(indeg.begin(), indeg.end(), [&](int x) { return x <= k; });
    };
    // Connectivity of the covered vertices in the underlying undirected sense.
    auto covered_connected = [&]() {
        std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
        for (ArcId a : arc_ids) {
            adj[static_cast<size_t>(d.arc(a).tail)].push_back(d.arc(a).head);
            adj[static_cast<size_t>(d.arc(a).head)].push_back(d.arc(a).tail);
        }
        Vertex start = -1;
        for (Vertex v = 0; v < n; ++v)
            if (touched[static_cast<size_t>(v)] > 0) {
                start = v;
                break;
            }
        if (start == -1) return true;
        std::vector<bool> vis(static_cast<size_t>(n), false);
        std::vector<Vertex> stack{start};
        vis[static_cast<size_t>(start)] = true;
        int cnt = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++cnt;
            for (Vertex u : adj[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(u)]) {
                    vis[static_cast<size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
        int total = 0;
        for (Vertex v = 0; v < n; ++v)
            if (touched[static_cast<size_t>(v)] > 0) ++total;
        return cnt == total;
    };

    switch (kind) {
        case ArcFamilyKind::Acyclic:
            return arcs_acyclic(d, arc_ids);
        case ArcFamilyKind::InBranching:
            return all_out_le(1) && arcs_acyclic(d, arc_ids);
        case ArcFamilyKind::InArborescence: {
            if (n <= 1) return m == 0;
            if (m != n - 1) return false;
            if (!all_out_le(1)) return false;
            if (!arcs_acyclic(d, arc_ids)) return false;
            // n-1 arcs with outdeg <= 1 leave exactly one vertex of outdegree
            // 0; spanning + connected iff every vertex is covered and the
            // covered vertices form one component.
            for (Vertex v = 0; v < n; ++v)
                if (touched[static_cast<size_t>(v)] == 0) return false;
            return covered_connected();
        }
        case ArcFamilyKind::Matching:
            return std::all_of(touched.begin(), touched.end(), [](int x) { return x <= 1; });
        case ArcFamilyKind::PerfectMatching:
            return std::all_of(touched.begin(), touched.end(), [](int x) { return x == 1; });
        case ArcFamilyKind::DisjointDipaths:
            return all_out_le(1) && all_in_le(1) && arcs_acyclic(d, arc_ids);
        case ArcFamilyKind::Dipath: {
            if (m == 0) return true;
            if (!all_out_le(1) || !all_in_le(1) || !arcs_acyclic(d, arc_ids)) return false;
            int covered = 0;
            for (Vertex v = 0; v < n; ++v)
                if (touched[static_cast<size_t>(v)] > 0) ++covered;
            return m == covered - 1 && covered_connected();
        }
        case ArcFamilyKind::HamiltonianDipath: {
            if (n <= 1) return m == 0;
            if (m != n - 1) return false;
            if (!all_out_le(1) || !all_in_le(1) || !arcs_acyclic(d, arc_ids)) return false;
            for (Vertex v = 0; v < n; ++v)
                if (touched[static_cast<size_t>(v)] == 0) return false;
            return covered_connected();
        }
    }
    return false;
}

std::vector<bool> make_membership(int n, const std::vector<Vertex>& vs) {
    std::vector<bool> in(static_cast<size_t>(n), false);
    for (Vertex v : vs) {
        if (v < 0 || v >= n) throw SpecError("vertex id out of range");
        in[static_cast<size_t>(v)] = true;
    }
    return in;
}

double outdegree_into(const Digraph& d, Vertex v, const std::vector<bool>& in_set) {
    double s = 0;
    for (ArcId a : d.out_arcs(v)) {
        Vertex h = d.arc(a).head;
        if (h != v && in_set[static_cast<size_t>(h)]) s += d.arc(a).weight;
    }
    return s;
}

int outdegree_count_into(const Digraph& d, Vertex v, const std::vector<bool>& in_set) {
    int c = 0;
    for (ArcId a : d.out_arcs(v))
        if (in_set[static_cast<size_t>(d.arc(a).head)]) ++c;
    return c;
}

int indegree_count_from(const Digraph& d, Vertex v, const std::vector<bool>& in_set) {
    int c = 0;
    for (ArcId a : d.in_arcs(v))
        if (in_set[static_cast<size_t>(d.arc(a).tail)]) ++c;
    return c;
}

std::vector<double> induced_min_outdegree(const Digraph& d, const std::vector<Vertex>& vs) {
    std::vector<bool> in = make_membership(d.vertex_count(), vs);
    std::vector<double> res;
    res.reserve(vs.size());
    for (Vertex v : vs) res.push_back(outdegree_into(d, v, in));
    return res;
}

}  // namespace ordo
