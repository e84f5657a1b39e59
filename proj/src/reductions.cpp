#include "ordo/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordo/family.hpp"

namespace ordo {

void CnfFormula::validate() const {
    if (num_vars <= 0) throw SpecError("formula needs at least one variable");
    if (clauses.empty()) throw SpecError("formula needs at least one clause");
    for (const auto& c : clauses)
        for (int lit : c)
            if (lit == 0 || lit < -num_vars || lit > num_vars)
                throw SpecError("literal out of range");
}

int CnfFormula::occurrences(int var) const {
    int cnt = 0;
    for (const auto& c : clauses)
        for (int lit : c)
            if (std::abs(lit) == var) ++cnt;
    return cnt;
}

void CnfFormula::validate_3xsat3() const {
    validate();
    if (static_cast<int>(clauses.size()) != num_vars)
        throw SpecError("3-XSAT-3 requires #clauses == #variables");
    for (int v = 1; v <= num_vars; ++v)
        if (occurrences(v) != 3)
            throw SpecError("3-XSAT-3 requires every variable to occur exactly 3 times");
}

namespace {

bool literal_true(int lit, const std::vector<bool>& assignment) {
    int var = std::abs(lit);
    bool val = assignment[static_cast<size_t>(var - 1)];
    return lit > 0 ? val : !val;
}

}  // namespace

bool exactly_one_in_three(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars) return false;
    for (const auto& c : f.clauses) {
        int trues = 0;
        for (int lit : c)
            if (literal_true(lit, assignment)) ++trues;
        if (trues != 1) return false;
    }
    return true;
}

bool nae_satisfying(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars) return false;
    for (const auto& c : f.clauses) {
        int trues = 0;
        for (int lit : c)
            if (literal_true(lit, assignment)) ++trues;
        if (trues == 0 || trues == 3) return false;
    }
    return true;
}

Vertex GadgetInstance::vertex(const std::string& tag) const {
    for (size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == tag) return static_cast<Vertex>(i);
    throw SpecError("unknown gadget tag: " + tag);
}

ArcId GadgetInstance::arc_between(const std::string& tag_tail, const std::string& tag_head) const {
    Vertex t = vertex(tag_tail), h = vertex(tag_head);
    for (ArcId a = 0; a < digraph.arc_count(); ++a)
        if (digraph.arc(a).tail == t && digraph.arc(a).head == h) return a;
    throw SpecError("no arc " + tag_tail + " -> " + tag_head + " in gadget");
}

namespace {

// Accumulates tagged vertices and arcs, then renumbers so that vertex ids
// follow the lexicographic order of the tags.
class GadgetBuilder {
  public:
    void vertex(const std::string& tag) {
        if (!ids_.emplace(tag, 0).second) throw SpecError("duplicate gadget tag: " + tag);
    }
    void arc(const std::string& tail, const std::string& head, double w = 1.0) {
        arcs_.push_back({tail, head, w});
    }
    void lower(const std::string& tag, double f) { lower_[tag] = f; }
    void upper(const std::string& tag, double g) { upper_[tag] = g; }
    void exact(const std::string& tag, double m) {
        lower(tag, m);
        upper(tag, m);
    }

    GadgetInstance finish() {
        int next = 0;
        for (auto& [tag, id] : ids_) id = next++;  // std::map iterates lexicographically
        std::vector<Arc> arcs;
        arcs.reserve(arcs_.size());
        for (const auto& [t, h, w] : arcs_) arcs.push_back({id_of(t), id_of(h), w});
        GadgetInstance inst;
        inst.digraph = Digraph(next, std::move(arcs));
        inst.tags.resize(static_cast<size_t>(next));
        for (const auto& [tag, id] : ids_) inst.tags[static_cast<size_t>(id)] = tag;
        inst.bounds = BoundSpec::none(next);
        for (const auto& [tag, f] : lower_) inst.bounds.f[static_cast<size_t>(id_of(tag))] = f;
        for (const auto& [tag, g] : upper_) inst.bounds.g[static_cast<size_t>(id_of(tag))] = g;
        return inst;
    }

  private:
    Vertex id_of(const std::string& tag) const {
        auto it = ids_.find(tag);
        if (it == ids_.end()) throw SpecError("arc references unknown tag: " + tag);
        return it->second;
    }

    std::map<std::string, Vertex> ids_;
    std::vector<std::tuple<std::string, std::string, double>> arcs_;
    std::map<std::string, double> lower_, upper_;
};

// Undirected edge list of a loop-free symmetric digraph, deduplicated and
// sorted.
std::vector<std::pair<Vertex, Vertex>> symmetric_edges(const Digraph& g) {
    std::set<std::pair<Vertex, Vertex>> dir;
    for (const Arc& a : g.arcs()) dir.emplace(a.tail, a.head);
    std::set<std::pair<Vertex, Vertex>> und;
    for (auto [u, v] : dir) {
        if (!dir.count({v, u})) throw SpecError("input digraph is not symmetric");
        und.emplace(std::min(u, v), std::max(u, v));
    }
    return {und.begin(), und.end()};
}

// Shared digraph of the two independent-set reductions. The bundle from s to
// e_1 has max(|V(G)|, k+1) arcs; the paper's |V(G)| suffices except in the
// boundary case k = |V(G)|, where one more arc is needed to force s before
// e_1.
GadgetInstance build_is_gadget(const Digraph& g_sym, int k, bool simple, bool neg_weights) {
    const int n = g_sym.vertex_count();
    if (k < 0 || k > n) throw SpecError("k must lie in [0, |V(G)|]");
    auto edges = symmetric_edges(g_sym);
    const int m = static_cast<int>(edges.size());

    GadgetBuilder b;
    b.vertex("s");
    for (Vertex v = 0; v < n; ++v) b.vertex("v" + std::to_string(v));
    for (int j = 1; j <= m; ++j) b.vertex("e" + std::to_string(j));

    const double sv_weight = neg_weights ? -1.0 : 1.0;
    for (Vertex v = 0; v < n; ++v) b.arc("s", "v" + std::to_string(v), sv_weight);
    for (int j = 1; j <= m; ++j) {
        auto [u, v] = edges[static_cast<size_t>(j - 1)];
        b.arc("e" + std::to_string(j), "v" + std::to_string(u));
        b.arc("e" + std::to_string(j), "v" + std::to_string(v));
    }

    int splits = 0;
    auto bundle = [&](const std::string& from, const std::string& to, int count) {
        for (int i = 0; i < count; ++i) {
            if (simple) {
                std::string p = "p" + std::to_string(++splits);
                b.vertex(p);
                b.upper(p, 0);
                b.arc(from, p);
                b.arc(p, to);
            } else {
                b.arc(from, to);
            }
        }
    };
    if (m >= 1) {
        bundle("s", "e1", std::max(n, k + 1));
        for (int j = 1; j < m; ++j)
            bundle("e" + std::to_string(j), "e" + std::to_string(j + 1), 2);
    }

    if (neg_weights) {
        b.upper("s", -static_cast<double>(k));
    } else {
        b.exact("s", k);
    }
    for (Vertex v = 0; v < n; ++v) b.upper("v" + std::to_string(v), 1);
    for (int j = 1; j <= m; ++j) b.upper("e" + std::to_string(j), 1);
    return b.finish();
}

}  // namespace

GadgetInstance gadget_independent_set(const Digraph& g_sym, int k, bool simple) {
    return build_is_gadget(g_sym, k, simple, /*neg_weights=*/false);
}

GadgetInstance gadget_independent_set_negweight(const Digraph& g_sym, int k) {
    return build_is_gadget(g_sym, k, /*simple=*/false, /*neg_weights=*/true);
}

namespace {

std::string xs(int i) { return "x" + std::to_string(i); }
std::string xbar(int i) { return "xb" + std::to_string(i); }
std::string lit_tag(int lit) { return lit > 0 ? xs(lit) : xbar(-lit); }

}  // namespace

GadgetInstance gadget_3xsat3(const CnfFormula& f) {
    f.validate_3xsat3();
    const int n = f.num_vars;
    GadgetBuilder b;
    for (int i = 1; i <= n; ++i) {
        b.vertex(xs(i));
        b.vertex(xbar(i));
        b.vertex("v" + std::to_string(i));
        b.vertex("vp" + std::to_string(i));
        b.vertex("c" + std::to_string(i));
        b.vertex("s" + std::to_string(i));
        b.vertex("t" + std::to_string(i));
    }
    for (int k = 1; k <= 3 * n - 1; ++k) b.vertex("p" + std::to_string(k));

    // middle backbone v_1..v_n, c_1..c_n, v'_1..v'_n with a p between every
    // two consecutive entries
    std::vector<std::string> middle;
    for (int i = 1; i <= n; ++i) middle.push_back("v" + std::to_string(i));
    for (int j = 1; j <= n; ++j) middle.push_back("c" + std::to_string(j));
    for (int i = 1; i <= n; ++i) middle.push_back("vp" + std::to_string(i));

    for (int i = 1; i <= n; ++i) {
        b.arc("v" + std::to_string(i), xs(i));
        b.arc("v" + std::to_string(i), xbar(i));
        b.arc("vp" + std::to_string(i), xs(i));
        b.arc("vp" + std::to_string(i), xbar(i));
        b.arc(xs(i), "s" + std::to_string(i));
        b.arc(xbar(i), "s" + std::to_string(i));
        b.arc(xs(i), "t" + std::to_string(i));
        b.arc(xs(i), "t" + std::to_string(i));
        b.arc(xbar(i), "t" + std::to_string(i));
        b.arc(xbar(i), "t" + std::to_string(i));
    }
    for (int j = 1; j <= n; ++j)
        for (int lit : f.clauses[static_cast<size_t>(j - 1)])
            b.arc("c" + std::to_string(j), lit_tag(lit));

    // chain arcs: v_i and v'_i point one step right in the backbone
    for (int i = 1; i <= n; ++i) {
        b.arc("v" + std::to_string(i),
              i < n ? "v" + std::to_string(i + 1) : std::string("c1"));
        b.arc("vp" + std::to_string(i),
              i < n ? "vp" + std::to_string(i + 1) : std::string("t1"));
    }
    // s_i: two parallel arcs right, one arc left
    for (int i = 1; i <= n; ++i) {
        std::string right = i < n ? "s" + std::to_string(i + 1) : std::string("v1");
        b.arc("s" + std::to_string(i), right);
        b.arc("s" + std::to_string(i), right);
        if (i >= 2) b.arc("s" + std::to_string(i), "s" + std::to_string(i - 1));
    }
    // t_i: two parallel arcs right (none for t_n), one arc left
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            b.arc("t" + std::to_string(i), "t" + std::to_string(i + 1));
            b.arc("t" + std::to_string(i), "t" + std::to_string(i + 1));
        }
        b.arc("t" + std::to_string(i),
              i >= 2 ? "t" + std::to_string(i - 1) : "vp" + std::to_string(n));
    }
    // p_k between middle[k-1] and middle[k]: one arc back, two forward
    for (int k = 1; k <= 3 * n - 1; ++k) {
        b.arc("p" + std::to_string(k), middle[static_cast<size_t>(k - 1)]);
        b.arc("p" + std::to_string(k), middle[static_cast<size_t>(k)]);
        b.arc("p" + std::to_string(k), middle[static_cast<size_t>(k)]);
    }

    GadgetInstance inst = b.finish();
    // bounds need the final degrees: f = 1, g = deg - 2, ends pinned
    const int nv = inst.digraph.vertex_count();
    for (Vertex v = 0; v < nv; ++v) {
        inst.bounds.f[static_cast<size_t>(v)] = 1;
        inst.bounds.g[static_cast<size_t>(v)] = inst.digraph.out_degree(v) - 2;
    }
    Vertex s1 = inst.vertex("s1");
    Vertex tn = inst.vertex("t" + std::to_string(n));
    inst.bounds.f[static_cast<size_t>(s1)] = inst.bounds.g[static_cast<size_t>(s1)] = 0;
    inst.bounds.f[static_cast<size_t>(tn)] = inst.bounds.g[static_cast<size_t>(tn)] = 1;
    return inst;
}

VertexOrder witness_order_3xsat3(const GadgetInstance& inst, const CnfFormula& f,
                                 const std::vector<bool>& assignment) {
    if (!exactly_one_in_three(f, assignment))
        throw SpecError("assignment does not satisfy the exactly-1-in-3 condition");
    const int n = f.num_vars;
    std::vector<std::string> seq;
    for (int i = 1; i <= n; ++i) seq.push_back("s" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        seq.push_back(assignment[static_cast<size_t>(i - 1)] ? xs(i) : xbar(i));
    std::vector<std::string> middle;
    for (int i = 1; i <= n; ++i) middle.push_back("v" + std::to_string(i));
    for (int j = 1; j <= n; ++j) middle.push_back("c" + std::to_string(j));
    for (int i = 1; i <= n; ++i) middle.push_back("vp" + std::to_string(i));
    for (int k = 0; k < 3 * n; ++k) {
        seq.push_back(middle[static_cast<size_t>(k)]);
        if (k < 3 * n - 1) seq.push_back("p" + std::to_string(k + 1));
    }
    for (int i = 1; i <= n; ++i)
        seq.push_back(assignment[static_cast<size_t>(i - 1)] ? xbar(i) : xs(i));
    for (int i = 1; i <= n; ++i) seq.push_back("t" + std::to_string(i));

    VertexOrder order;
    order.reserve(seq.size());
    for (const std::string& tag : seq) order.push_back(inst.vertex(tag));

    DegreeProfile prof = degree_profile(inst.digraph, order);
    for (Vertex v = 0; v < inst.digraph.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (prof.delta_left[i] < inst.bounds.f[i] || prof.delta_left[i] > inst.bounds.g[i])
            throw std::logic_error("witness order violates bounds at " + inst.tags[i]);
    }
    return order;
}

std::vector<bool> extract_assignment_3xsat3(const GadgetInstance& inst, const CnfFormula& f,
                                            const VertexOrder& order) {
    std::vector<int> pos = order_positions(inst.digraph, order);
    int first_clause_pos = inst.digraph.vertex_count();
    for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j)
        first_clause_pos = std::min(first_clause_pos,
                                    pos[static_cast<size_t>(inst.vertex("c" + std::to_string(j)))]);
    std::vector<bool> assignment(static_cast<size_t>(f.num_vars));
    for (int i = 1; i <= f.num_vars; ++i)
        assignment[static_cast<size_t>(i - 1)] =
            pos[static_cast<size_t>(inst.vertex(xs(i)))] < first_clause_pos;
    return assignment;
}

namespace {

std::string occ(const char* prefix, int j, int k) {
    return std::string(prefix) + std::to_string(j) + "_" + std::to_string(k);
}
std::string var_node(int i, int l) {
    return "v" + std::to_string(i) + "_" + std::to_string(l);
}

GadgetInstance build_nae_gadget(const CnfFormula& f, bool perfect) {
    f.validate();
    const int m = static_cast<int>(f.clauses.size());
    GadgetBuilder b;
    // clause gadgets: outer cycle c1 u1 c2 u2 c3 u3, inner cycle
    // cb1 u3 cb3 u2 cb2 u1
    for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= 3; ++k) {
            b.vertex(occ("c", j, k));
            b.vertex(occ("cb", j, k));
            b.vertex(occ("u", j, k));
        }
        for (int k = 1; k <= 3; ++k) {
            b.arc(occ("c", j, k), occ("u", j, k));
            b.arc(occ("u", j, k), occ("c", j, k % 3 + 1));
        }
        b.arc(occ("cb", j, 1), occ("u", j, 3));
        b.arc(occ("u", j, 3), occ("cb", j, 3));
        b.arc(occ("cb", j, 3), occ("u", j, 2));
        b.arc(occ("u", j, 2), occ("cb", j, 2));
        b.arc(occ("cb", j, 2), occ("u", j, 1));
        b.arc(occ("u", j, 1), occ("cb", j, 1));
    }
    // variable gadgets
    for (int i = 1; i <= f.num_vars; ++i) {
        for (int l = 1; l <= 5; ++l) b.vertex(var_node(i, l));
        b.arc(var_node(i, 1), var_node(i, 2));
        b.arc(var_node(i, 2), var_node(i, 1));
        b.arc(var_node(i, 2), var_node(i, 3));
        b.arc(var_node(i, 3), var_node(i, 4));
        b.arc(var_node(i, 4), var_node(i, 5));
        b.arc(var_node(i, 5), var_node(i, 2));
        if (perfect) {
            b.vertex("s" + std::to_string(i));
            b.arc(var_node(i, 3), "s" + std::to_string(i));
            b.arc("s" + std::to_string(i), var_node(i, 5));
        }
    }
    // occurrence extensions join literal vertices into the variable gadget
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            int lit = f.clauses[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
            int i = std::abs(lit);
            b.vertex(occ("y", j, k));
            b.vertex(occ("z", j, k));
            std::string pos_lit = occ("c", j, k), neg_lit = occ("cb", j, k);
            if (lit < 0) std::swap(pos_lit, neg_lit);
            // dipath v5 -> (negated literal) -> z -> v4 -> y -> (literal) -> v3
            b.arc(var_node(i, 5), neg_lit);
            b.arc(neg_lit, occ("z", j, k));
            b.arc(occ("z", j, k), var_node(i, 4));
            b.arc(var_node(i, 4), occ("y", j, k));
            b.arc(occ("y", j, k), pos_lit);
            b.arc(pos_lit, var_node(i, 3));
            if (perfect) {
                b.vertex(occ("t", j, k));
                b.arc(occ("y", j, k), occ("t", j, k));
                b.arc(occ("t", j, k), occ("z", j, k));
            }
        }
    return b.finish();
}

std::vector<ArcId> build_nae_witness(const GadgetInstance& inst, const CnfFormula& f,
                                     const std::vector<bool>& assignment, bool perfect) {
    if (!nae_satisfying(f, assignment))
        throw SpecError("assignment does not NAE-satisfy the formula");
    std::vector<ArcId> matching;
    const int m = static_cast<int>(f.clauses.size());
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            int lit = f.clauses[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
            if (literal_true(lit, assignment))
                matching.push_back(inst.arc_between(occ("c", j, k), occ("u", j, k)));
            else
                matching.push_back(inst.arc_between(occ("u", j, k), occ("cb", j, k)));
        }
    for (int i = 1; i <= f.num_vars; ++i) {
        matching.push_back(inst.arc_between(var_node(i, 1), var_node(i, 2)));
        bool val = assignment[static_cast<size_t>(i - 1)];
        matching.push_back(val ? inst.arc_between(var_node(i, 3), var_node(i, 4))
                               : inst.arc_between(var_node(i, 4), var_node(i, 5)));
        if (perfect)
            matching.push_back(val ? inst.arc_between("s" + std::to_string(i), var_node(i, 5))
                                   : inst.arc_between(var_node(i, 3), "s" + std::to_string(i)));
    }
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            int lit = f.clauses[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
            int i = std::abs(lit);
            std::string pos_lit = occ("c", j, k), neg_lit = occ("cb", j, k);
            if (lit < 0) std::swap(pos_lit, neg_lit);
            bool val = assignment[static_cast<size_t>(i - 1)];
            if (val)
                matching.push_back(inst.arc_between(neg_lit, occ("z", j, k)));
            else
                matching.push_back(inst.arc_between(occ("y", j, k), pos_lit));
            if (perfect)
                matching.push_back(val ? inst.arc_between(occ("y", j, k), occ("t", j, k))
                                       : inst.arc_between(occ("t", j, k), occ("z", j, k)));
        }
    std::sort(matching.begin(), matching.end());
    return matching;
}

}  // namespace

GadgetInstance gadget_nae3sat_matching(const CnfFormula& f) {
    return build_nae_gadget(f, /*perfect=*/false);
}

std::vector<ArcId> witness_matching_nae(const GadgetInstance& inst, const CnfFormula& f,
                                        const std::vector<bool>& assignment) {
    std::vector<ArcId> matching = build_nae_witness(inst, f, assignment, /*perfect=*/false);
    if (!classify_arc_set(inst.digraph, matching, ArcFamilyKind::Matching))
        throw std::logic_error("NAE witness is not a matching");
    return matching;
}

GadgetInstance gadget_nae3sat_perfect_matching(const CnfFormula& f) {
    return build_nae_gadget(f, /*perfect=*/true);
}

std::vector<ArcId> witness_perfect_matching_nae(const GadgetInstance& inst, const CnfFormula& f,
                                                const std::vector<bool>& assignment) {
    std::vector<ArcId> matching = build_nae_witness(inst, f, assignment, /*perfect=*/true);
    if (!classify_arc_set(inst.digraph, matching, ArcFamilyKind::PerfectMatching))
        throw std::logic_error("NAE witness is not a perfect matching");
    return matching;
}

std::vector<bool> extract_assignment_nae(const GadgetInstance& inst, const CnfFormula& f,
                                         const std::vector<ArcId>& matching) {
    std::vector<bool> in_matching(static_cast<size_t>(inst.digraph.arc_count()), false);
    for (ArcId a : matching) in_matching[static_cast<size_t>(a)] = true;
    std::vector<bool> assignment(static_cast<size_t>(f.num_vars));
    for (int i = 1; i <= f.num_vars; ++i) {
        ArcId v34 = inst.arc_between(var_node(i, 3), var_node(i, 4));
        assignment[static_cast<size_t>(i - 1)] = in_matching[static_cast<size_t>(v34)];
    }
    return assignment;
}

Digraph gadget_split_arcs(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Arc> arcs;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        Vertex split = n + a;
        arcs.push_back({d.arc(a).tail, split, 1.0});
        arcs.push_back({split, d.arc(a).head, 1.0});
    }
    return Digraph(n + d.arc_count(), std::move(arcs));
}

Digraph gadget_matching_to_dipaths(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Arc> arcs = d.arcs();
    for (Vertex v = 0; v < n; ++v) {
        arcs.push_back({v, n + v, 1.0});
        arcs.push_back({n + v, v, 1.0});
    }
    return Digraph(2 * n, std::move(arcs));
}

Digraph gadget_hampath_split(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) {
        arcs.push_back({v, n + v, 1.0});      // v1 -> v2
        arcs.push_back({n + v, v, 1.0});      // v2 -> v1
    }
    for (const Arc& a : d.arcs()) arcs.push_back({n + a.tail, a.head, 1.0});  // u2 -> v1
    return Digraph(2 * n, std::move(arcs));
}

Digraph gadget_1distance(const Digraph& g_sym) {
    const int n = g_sym.vertex_count();
    auto edges = symmetric_edges(g_sym);
    std::set<std::pair<Vertex, Vertex>> edge_set(edges.begin(), edges.end());
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!edge_set.count({u, v})) {
                arcs.push_back({u, v, 1.0});
                arcs.push_back({v, u, 1.0});
            }
    return Digraph(n, std::move(arcs));
}

Digraph gadget_distance_lift(const Digraph& d1_instance, int dist, int l) {
    if (dist < 1) throw SpecError("distance must be >= 1");
    if (l < 1 || d1_instance.vertex_count() != 2 * l)
        throw SpecError("distance lift requires a base instance on exactly 2l vertices");
    const int n = d1_instance.vertex_count();
    std::vector<Arc> arcs = d1_instance.arcs();
    int next = n;
    for (int block = 0; block < dist - 1; ++block) {
        for (int a = 0; a < l + 1; ++a)
            for (int b = 0; b < l + 1; ++b)
                if (a != b) arcs.push_back({next + a, next + b, 1.0});
        next += l + 1;
    }
    return Digraph(next, std::move(arcs));
}

}  // namespace ordo
