#include "ordo/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordo/applications.hpp"
#include "ordo/bounded.hpp"
#include "ordo/family.hpp"
#include "ordo/io.hpp"
#include "ordo/oracle.hpp"
#include "ordo/reductions.hpp"
#include "ordo/simultaneous.hpp"

namespace ordo::cli {

namespace {

using nlohmann::json;

json json_num(double x) {
    if (x == pos_inf) return "inf";
    if (x == neg_inf) return "-inf";
    if (x == std::floor(x) && std::abs(x) < 1e15) return static_cast<long long>(x);
    return x;
}

json json_nums(const std::vector<double>& xs) {
    json arr = json::array();
    for (double x : xs) arr.push_back(json_num(x));
    return arr;
}

json profile_json(const DegreeProfile& p) {
    json j;
    j["delta_left"] = p.delta_left;
    j["delta_right"] = p.delta_right;
    j["rho_left"] = p.rho_left;
    j["rho_right"] = p.rho_right;
    j["delta_left_w"] = json_nums(p.delta_left_w);
    j["rho_right_w"] = json_nums(p.rho_right_w);
    return j;
}

json witness_json(const Witness& w) {
    json j;
    switch (w.kind) {
        case WitnessKind::InducedSet:
            j["type"] = "induced-set";
            j["vertices"] = w.vertices;
            break;
        case WitnessKind::CutSet:
            j["type"] = "cut-set";
            j["vertices"] = w.vertices;
            j["k"] = w.k;
            break;
        case WitnessKind::StuckSet:
            j["type"] = "stuck-set";
            j["vertices"] = w.vertices;
            break;
        case WitnessKind::SumMismatch:
            j["type"] = "sum-mismatch";
            j["lhs"] = w.lhs;
            j["rhs"] = w.rhs;
            break;
    }
    j["validated"] = w.validated;
    return j;
}

json partition_json(const ArcPartition& p) {
    json j;
    j["kind"] = to_string(p.kind);
    j["family"] = p.family_arcs;
    j["acyclic"] = p.acyclic_arcs;
    return j;
}

json result_json(const SolveResult& r) {
    json j;
    j["schema"] = "ordo/1";
    if (is_feasible(r)) {
        j["feasible"] = true;
        j["order"] = feasible(r).order;
        j["profile"] = profile_json(feasible(r).profile);
    } else {
        j["feasible"] = false;
        const Infeasible& inf = infeasible(r);
        j["witness"] = inf.witness ? witness_json(*inf.witness) : json(nullptr);
        if (!inf.reason.empty()) j["diagnostics"] = json::array({inf.reason});
    }
    return j;
}

int emit(std::ostream& out, const json& j, int code) {
    out << j.dump(2) << "\n";
    return code;
}

int emit_result(std::ostream& out, const SolveResult& r, json j) {
    return emit(out, j, is_feasible(r) ? 0 : 1);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> xs;
    if (text.empty()) return xs;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw SpecError("bad integer list entry: " + tok);
        xs.push_back(v);
    }
    return xs;
}

// DIMACS-style CNF with exactly three literals per clause.
CnfFormula read_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    CnfFormula f;
    std::string line;
    bool have_header = false;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            int nv = 0, nc = 0;
            if (!(ls >> kind >> nv >> nc) || kind != "cnf") throw SpecError("bad DIMACS header");
            f.num_vars = nv;
            have_header = true;
            continue;
        }
        if (!have_header) throw SpecError("clause before DIMACS header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3) throw SpecError("every clause must have three literals");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw SpecError("unterminated clause");
    f.validate();
    return f;
}

Digraph load_graph(const std::string& path, double w_default = 1.0) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    Digraph d = parse_digraph(in);
    if (w_default != 1.0) {
        // the .dg parser applies weight 1 to weightless arcs; a w_default in
        // the bounds file replaces that default
        std::ifstream in2(path);
        Digraph d2 = parse_digraph(in2);
        std::vector<Arc> arcs = d2.arcs();
        std::istringstream probe;
        (void)probe;
        for (Arc& a : arcs)
            if (a.weight == 1.0) a.weight = w_default;
        return Digraph(d2.vertex_count(), std::move(arcs));
    }
    return d;
}

struct OracleCaps {
    int order_cap = 8;
    int partition_cap = 22;
};

OracleConfig oracle_config(std::optional<int> cap_flag) {
    OracleConfig cfg;
    if (const char* env = std::getenv("ORDO_ORACLE_CAP")) {
        cfg.order_cap = std::atoi(env);
        cfg.partition_cap = std::max(cfg.partition_cap, cfg.order_cap);
    }
    if (cap_flag) {
        cfg.order_cap = *cap_flag;
        cfg.partition_cap = std::max(cfg.partition_cap, *cap_flag);
    }
    return cfg;
}

FamilyGoal goal_from_flags(ArcFamilyKind kind, const std::string& roots, int root,
                           const std::string& s_list, const std::string& t_list, int s_end,
                           int t_end, int count) {
    FamilyGoal goal;
    goal.kind = kind;
    for (int r : parse_int_list(roots)) goal.forced_roots.push_back(r);
    if (root >= 0) goal.root = root;
    for (int v : parse_int_list(s_list)) goal.sources.push_back(v);
    for (int v : parse_int_list(t_list)) goal.sinks.push_back(v);
    if (s_end >= 0 && t_end >= 0) goal.endpoints = {s_end, t_end};
    if (count > 0) goal.count = count;
    return goal;
}

// ------------------------------ verify -------------------------------------

struct VerifyArgs {
    std::string graph, bounds, claim, order_text, family_text, kind_text, mode;
    std::string roots, s_list, t_list;
    int s_end = -1, t_end = -1, root = -1, dist = -1, k = 0;
};

std::string infer_mode(const BoundsFile& bf) {
    if (!bf.m_delta.empty() && !bf.m_rho.empty()) return "exact";
    if (bf.has_f && bf.has_g) return "fg";
    if (bf.has_g) return "upper";
    if (bf.has_f) return "lower";
    return "fg";
}

bool verify_order_bounds(const Digraph& d, const BoundsFile& bf, const std::string& mode,
                         const VertexOrder& order, int dist, std::vector<std::string>& notes) {
    DegreeProfile p = degree_profile(d, order);
    const int n = d.vertex_count();
    auto check_g = [&](bool weighted) {
        for (int v = 0; v < n; ++v) {
            double val = weighted ? p.delta_left_w[static_cast<size_t>(v)]
                                  : p.delta_left[static_cast<size_t>(v)];
            if (val > bf.fg.g[static_cast<size_t>(v)]) return false;
        }
        return true;
    };
    auto check_f = [&](bool weighted) {
        for (int v = 0; v < n; ++v) {
            double val = weighted ? p.delta_left_w[static_cast<size_t>(v)]
                                  : p.delta_left[static_cast<size_t>(v)];
            if (val < bf.fg.f[static_cast<size_t>(v)]) return false;
        }
        return true;
    };
    if (mode == "upper") return check_g(true);
    if (mode == "lower") return check_f(true);
    if (mode == "fg" || mode == "mixed") return check_f(true) && check_g(true);
    if (mode == "out-upper-in-lower") {
        for (int v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            if (p.delta_left[i] > bf.fg.g[i] || p.rho_right[i] < bf.fg.f[i]) return false;
        }
        return true;
    }
    if (mode == "out-lower-in-upper") {
        for (int v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            if (p.delta_left[i] < bf.fg.f[i] || p.rho_right[i] > bf.fg.g[i]) return false;
        }
        return true;
    }
    if (mode == "exact") {
        if (bf.m_delta.empty() || bf.m_rho.empty()) {
            notes.push_back("exact mode requires m_delta and m_rho");
            return false;
        }
        for (int v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            if (p.delta_left[i] != bf.m_delta[i] || p.rho_right[i] != bf.m_rho[i]) return false;
        }
        return true;
    }
    if (mode == "d-distance") {
        if (dist < 0) {
            notes.push_back("d-distance mode requires --d");
            return false;
        }
        std::vector<double> win = d_distance_window_degrees(d, order, dist);
        for (int v = 0; v < n; ++v)
            if (win[static_cast<size_t>(v)] > bf.fg.g[static_cast<size_t>(v)]) return false;
        return true;
    }
    notes.push_back("unknown mode: " + mode);
    return false;
}

bool verify_witness(const Digraph& d, const BoundsFile& bf, const std::string& mode,
                    const json& w, const VerifyArgs& va, std::vector<std::string>& notes) {
    std::string type = w.value("type", "");
    if (type == "induced-set") {
        std::vector<Vertex> vs = w.at("vertices").get<std::vector<Vertex>>();
        std::vector<bool> in_set = make_membership(d.vertex_count(), vs);
        if (mode == "lower") {
            // every member needs delta_w(v, V \ Vp) < f(v)
            std::vector<bool> outside(in_set.size());
            for (size_t i = 0; i < in_set.size(); ++i) outside[i] = !in_set[i];
            for (Vertex v : vs)
                if (!(outdegree_into(d, v, outside) < bf.fg.f[static_cast<size_t>(v)]))
                    return false;
            return true;
        }
        // upper-style: every member needs delta_w(v, Vp \ {v}) > g(v)
        std::vector<double> degs = induced_min_outdegree(d, vs);
        for (size_t i = 0; i < vs.size(); ++i)
            if (!(degs[i] > bf.fg.g[static_cast<size_t>(vs[i])])) return false;
        return true;
    }
    if (type == "cut-set") {
        std::vector<Vertex> vs = w.at("vertices").get<std::vector<Vertex>>();
        int k = w.value("k", 0);
        return check_cut_set(d, vs, k, parse_int_list(va.s_list), parse_int_list(va.t_list));
    }
    if (type == "stuck-set") {
        std::vector<Vertex> vs = w.at("vertices").get<std::vector<Vertex>>();
        if (!va.s_list.empty() || !va.t_list.empty())
            return check_st_stuck_set(d, vs, parse_int_list(va.s_list), parse_int_list(va.t_list));
        notes.push_back("stuck-set witnesses carry no independent characterization; not checked");
        return true;
    }
    if (type == "sum-mismatch") {
        if (bf.m_delta.empty() || bf.m_rho.empty()) {
            notes.push_back("sum-mismatch witness needs m_delta/m_rho bounds");
            return false;
        }
        long long sd = 0, sr = 0;
        for (int x : bf.m_delta) sd += x;
        for (int x : bf.m_rho) sr += x;
        return sd != sr && w.value("lhs", 0ll) == sd && w.value("rhs", 0ll) == sr;
    }
    notes.push_back("unknown witness type: " + type);
    return false;
}

int run_verify(const VerifyArgs& va, std::ostream& out) {
    std::vector<std::string> notes;
    bool valid = true;

    BoundsFile bf;
    Digraph d = [&] {
        if (!va.bounds.empty()) {
            Digraph probe = read_digraph_file(va.graph);
            bf = read_bounds_file(va.bounds, probe.vertex_count());
            return load_graph(va.graph, bf.w_default);
        }
        return read_digraph_file(va.graph);
    }();
    if (va.bounds.empty()) bf.fg = BoundSpec::none(d.vertex_count());
    std::string mode = va.mode.empty() ? infer_mode(bf) : va.mode;

    std::optional<VertexOrder> order;
    if (!va.order_text.empty()) order = parse_int_list(va.order_text);

    std::optional<json> claim;
    if (!va.claim.empty()) {
        claim = json::parse(read_text_file(va.claim));
        if (claim->value("schema", "") != "ordo/1") notes.push_back("claim missing ordo/1 schema");
        if ((*claim)["feasible"].get<bool>()) {
            order = (*claim)["order"].get<VertexOrder>();
        } else {
            if (!(*claim).contains("witness") || (*claim)["witness"].is_null()) {
                notes.push_back("infeasible claim without witness; nothing to check");
            } else {
                valid = verify_witness(d, bf, mode, (*claim)["witness"], va, notes);
            }
        }
    }

    if (order) {
        if (!va.kind_text.empty()) {
            auto kind = arc_family_kind_from_string(va.kind_text);
            if (!kind) throw SpecError("unknown family kind: " + va.kind_text);
            FamilyGoal goal = goal_from_flags(*kind, va.roots, va.root, va.s_list, va.t_list,
                                              va.s_end, va.t_end, va.k);
            valid = valid && satisfies_family(d, left_arcs(d, *order), goal);
        } else if (!va.family_text.empty()) {
            notes.push_back("--family given without --kind");
            valid = false;
        } else {
            valid = valid && verify_order_bounds(d, bf, mode, *order, va.dist, notes);
        }
    } else if (!va.family_text.empty()) {
        // partition claim: family arc ids + kind
        auto kind = arc_family_kind_from_string(va.kind_text);
        if (!kind) throw SpecError("partition verification requires --kind");
        std::vector<ArcId> fam = parse_int_list(va.family_text);
        std::vector<bool> in_fam(static_cast<size_t>(d.arc_count()), false);
        for (ArcId a : fam) {
            if (a < 0 || a >= d.arc_count()) throw SpecError("family arc id out of range");
            in_fam[static_cast<size_t>(a)] = true;
        }
        std::vector<ArcId> rest;
        for (ArcId a = 0; a < d.arc_count(); ++a)
            if (!in_fam[static_cast<size_t>(a)]) rest.push_back(a);
        valid = classify_arc_set(d, fam, *kind) &&
                classify_arc_set(d, rest, ArcFamilyKind::Acyclic);
    } else if (!claim) {
        throw SpecError("verify needs --order, --family, or --claim");
    }

    json j;
    j["schema"] = "ordo/1";
    j["valid"] = valid;
    j["diagnostics"] = notes;
    return emit(out, j, valid ? 0 : 1);
}

// ------------------------------ gen -----------------------------------------

// Uniform integer below bound via rejection from mt19937_64, so output is
// identical on every platform.
uint64_t next_below(std::mt19937_64& rng, uint64_t bound) {
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Digraph gen_digraph(int n, std::optional<int> m, std::optional<double> p, uint64_t seed, int wmax) {
    if (n < 0) throw SpecError("n must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    if (m) {
        if (*m < 0 || (n < 2 && *m > 0)) throw SpecError("impossible arc count");
        for (int i = 0; i < *m; ++i) {
            Vertex t = static_cast<Vertex>(next_below(rng, static_cast<uint64_t>(n)));
            Vertex h = static_cast<Vertex>(next_below(rng, static_cast<uint64_t>(n - 1)));
            if (h >= t) ++h;
            double w = wmax > 0 ? 1.0 + static_cast<double>(next_below(rng, static_cast<uint64_t>(wmax))) : 1.0;
            arcs.push_back({t, h, w});
        }
    } else {
        double prob = p.value_or(0.3);
        if (prob < 0 || prob > 1) throw SpecError("p must lie in [0, 1]");
        for (Vertex t = 0; t < n; ++t)
            for (Vertex h = 0; h < n; ++h) {
                if (t == h) continue;
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < prob) {
                    double w =
                        wmax > 0 ? 1.0 + static_cast<double>(next_below(rng, static_cast<uint64_t>(wmax))) : 1.0;
                    arcs.push_back({t, h, w});
                }
            }
    }
    return Digraph(n, std::move(arcs));
}

// ------------------------------ subcommands ---------------------------------

struct SolveArgs {
    std::string graph, bounds;
    int k = 0;
    int cap = 2;
};

int run_solve(const std::string& which, const SolveArgs& sa, std::ostream& out) {
    if (which == "minmax") {
        Digraph d = read_digraph_file(sa.graph);
        auto [order, value] = solve_minmax(d);
        json j;
        j["schema"] = "ordo/1";
        j["feasible"] = true;
        j["order"] = order;
        j["value"] = json_num(value);
        j["profile"] = profile_json(degree_profile(d, order));
        return emit(out, j, 0);
    }
    Digraph probe = read_digraph_file(sa.graph);
    BoundsFile bf = sa.bounds.empty() ? BoundsFile{BoundSpec::none(probe.vertex_count()), {}, {},
                                                   false, false, 1.0}
                                      : read_bounds_file(sa.bounds, probe.vertex_count());
    Digraph d = load_graph(sa.graph, bf.w_default);

    SolveResult r = [&]() -> SolveResult {
        if (which == "upper") return solve_upper(d, bf.fg.g);
        if (which == "lower") return solve_lower(d, bf.fg.f);
        if (which == "mixed") return solve_mixed_per_vertex(d, bf.fg);
        if (which == "out-upper-in-lower") return solve_out_upper_in_lower(d, bf.fg.g, bf.fg.f);
        if (which == "out-lower-in-upper") return solve_out_lower_in_upper(d, bf.fg.f, bf.fg.g);
        if (which == "exact") {
            if (bf.m_delta.empty() || bf.m_rho.empty())
                throw SpecError("solve exact requires m_delta and m_rho in the bounds file");
            return solve_exact(d, bf.m_delta, bf.m_rho);
        }
        if (which == "d-distance") return solve_d_distance_large(d, bf.fg.g, sa.k, sa.cap);
        throw SpecError("unknown solve mode: " + which);
    }();
    return emit_result(out, r, result_json(r));
}

int run_order_family(const std::string& which, const std::string& graph, const FamilyGoal& flags,
                     int k, int cap, std::ostream& out) {
    Digraph d = read_digraph_file(graph);
    FamilyOrderResult r = [&]() -> FamilyOrderResult {
        if (which == "in-branching") return order_in_branching(d, flags.forced_roots);
        if (which == "st-dipaths")
            return order_k_disjoint_st_dipaths(d, DipathSystemSpec{flags.sources, flags.sinks});
        if (which == "ham-dipath") return order_hamiltonian_dipath(d, flags.endpoints);
        if (which == "dipaths") return order_disjoint_dipaths_free_endpoints(d, k, cap);
        if (which == "in-arb-out-arb") return order_in_arb_out_arb(d, flags.root);
        throw SpecError("unknown family ordering: " + which);
    }();
    json j = result_json(r.result);
    if (r.partition) j["partition"] = partition_json(*r.partition);
    if (which == "dipaths")
        j["diagnostics"].push_back("convention: each of the k dipaths contains at least one arc");
    return emit_result(out, r.result, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-bounded vertex orderings and family-constrained arc partitions"};
    app.require_subcommand(1);

    // ---- solve
    auto* solve = app.add_subcommand("solve", "bounded-ordering solvers");
    solve->require_subcommand(1);
    static const std::vector<std::string> solve_modes = {
        "upper", "lower", "minmax", "mixed", "out-upper-in-lower",
        "out-lower-in-upper", "exact", "d-distance"};
    auto sa = std::make_shared<SolveArgs>();
    std::string solve_mode_chosen;
    for (const std::string& mode : solve_modes) {
        auto* sub = solve->add_subcommand(mode);
        sub->add_option("--graph", sa->graph)->required();
        if (mode != "minmax") sub->add_option("--bounds", sa->bounds);
        if (mode == "d-distance") {
            sub->add_option("--k", sa->k)->required();
            sub->add_option("--cap", sa->cap);
        }
        sub->callback([&solve_mode_chosen, mode] { solve_mode_chosen = mode; });
    }

    // ---- order-family
    auto* fam = app.add_subcommand("order-family", "orders whose left-going arcs form a family");
    fam->require_subcommand(1);
    struct FamArgs {
        std::string graph, roots, s_list, t_list;
        int s_end = -1, t_end = -1, root = -1, k = 1, cap = 2;
    };
    auto fa = std::make_shared<FamArgs>();
    std::string fam_chosen;
    for (const std::string& mode :
         {std::string("in-branching"), std::string("st-dipaths"), std::string("ham-dipath"),
          std::string("dipaths"), std::string("in-arb-out-arb")}) {
        auto* sub = fam->add_subcommand(mode);
        sub->add_option("--graph", fa->graph)->required();
        if (mode == "in-branching") sub->add_option("--roots", fa->roots);
        if (mode == "st-dipaths") {
            sub->add_option("--S", fa->s_list)->required();
            sub->add_option("--T", fa->t_list)->required();
        }
        if (mode == "ham-dipath") {
            sub->add_option("--s", fa->s_end);
            sub->add_option("--t", fa->t_end);
        }
        if (mode == "dipaths") {
            sub->add_option("--k", fa->k)->required();
            sub->add_option("--cap", fa->cap);
        }
        if (mode == "in-arb-out-arb") sub->add_option("--root", fa->root);
        sub->callback([&fam_chosen, mode] { fam_chosen = mode; });
    }

    // ---- partition
    auto* part = app.add_subcommand("partition", "family + acyclic arc partitions");
    std::string part_graph, part_kind;
    std::optional<int> part_cap;
    part->add_option("--graph", part_graph)->required();
    part->add_option("--kind", part_kind)->required();
    part->add_option("--cap", part_cap);

    // ---- oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth engines");
    oracle->require_subcommand(1);
    struct OracleArgs {
        std::string graph, bounds, kind, roots, s_list, t_list, side = "left", sense = "min";
        int s_end = -1, t_end = -1, root = -1, dist = -1, k = 0;
        std::optional<int> cap;
    };
    auto oa = std::make_shared<OracleArgs>();
    std::string oracle_chosen;
    {
        auto* sub = oracle->add_subcommand("order", "first satisfying permutation");
        sub->add_option("--graph", oa->graph)->required();
        sub->add_option("--bounds", oa->bounds);
        sub->add_option("--kind", oa->kind);
        sub->add_option("--roots", oa->roots);
        sub->add_option("--S", oa->s_list);
        sub->add_option("--T", oa->t_list);
        sub->add_option("--s", oa->s_end);
        sub->add_option("--t", oa->t_end);
        sub->add_option("--root", oa->root);
        sub->add_option("--k", oa->k);
        sub->add_option("--d", oa->dist);
        sub->add_option("--cap", oa->cap);
        sub->callback([&oracle_chosen] { oracle_chosen = "order"; });
    }
    {
        auto* sub = oracle->add_subcommand("partition", "first family + acyclic split");
        sub->add_option("--graph", oa->graph)->required();
        sub->add_option("--kind", oa->kind)->required();
        sub->add_option("--cap", oa->cap);
        sub->callback([&oracle_chosen] { oracle_chosen = "partition"; });
    }
    {
        auto* sub = oracle->add_subcommand("dec-min", "decreasingly minimal bounded order");
        sub->add_option("--graph", oa->graph)->required();
        sub->add_option("--bounds", oa->bounds);
        sub->add_option("--cap", oa->cap);
        sub->callback([&oracle_chosen] { oracle_chosen = "dec-min"; });
    }
    {
        auto* sub = oracle->add_subcommand("min-inbranching", "minimum in-branching cycle cover");
        sub->add_option("--graph", oa->graph)->required();
        sub->add_option("--cap", oa->cap);
        sub->callback([&oracle_chosen] { oracle_chosen = "min-inbranching"; });
    }
    {
        auto* sub = oracle->add_subcommand("lex", "lexicographically optimal orders");
        sub->add_option("--graph", oa->graph)->required();
        sub->add_option("--side", oa->side)->check(CLI::IsMember({"left", "right"}));
        sub->add_option("--sense", oa->sense)->check(CLI::IsMember({"min", "max"}));
        sub->add_option("--cap", oa->cap);
        sub->callback([&oracle_chosen] { oracle_chosen = "lex"; });
    }

    // ---- reduce
    auto* reduce = app.add_subcommand("reduce", "hardness-reduction gadget builders");
    reduce->require_subcommand(1);
    struct ReduceArgs {
        std::string graph, cnf, out_prefix;
        int k = 1, dist = 2, l = 1;
        bool simple = false;
    };
    auto ra = std::make_shared<ReduceArgs>();
    std::string reduce_chosen;
    for (const std::string& mode :
         {std::string("is"), std::string("is-negw"), std::string("3xsat3"),
          std::string("nae-matching"), std::string("nae-perfect"), std::string("split-arcs"),
          std::string("match-to-dipaths"), std::string("hampath-split"), std::string("1dist"),
          std::string("dist-lift")}) {
        auto* sub = reduce->add_subcommand(mode);
        bool needs_cnf = mode == "3xsat3" || mode == "nae-matching" || mode == "nae-perfect";
        if (needs_cnf)
            sub->add_option("--cnf", ra->cnf)->required();
        else
            sub->add_option("--graph", ra->graph)->required();
        if (mode == "is" || mode == "is-negw") sub->add_option("--k", ra->k)->required();
        if (mode == "is") sub->add_flag("--simple", ra->simple);
        if (mode == "dist-lift") {
            sub->add_option("--d", ra->dist)->required();
            sub->add_option("--l", ra->l)->required();
        }
        sub->add_option("--out", ra->out_prefix)->required();
        sub->callback([&reduce_chosen, mode] { reduce_chosen = mode; });
    }

    // ---- rank
    auto* rank = app.add_subcommand("rank", "rank aggregation pipelines");
    rank->require_subcommand(1);
    struct RankArgs {
        std::string rankings, bounds, out_path;
    };
    auto rka = std::make_shared<RankArgs>();
    std::string rank_chosen;
    for (const std::string& mode :
         {std::string("penalty"), std::string("minmax"), std::string("disappointment")}) {
        auto* sub = rank->add_subcommand(mode);
        sub->add_option("--rankings", rka->rankings)->required();
        if (mode == "penalty") sub->add_option("--out", rka->out_path);
        if (mode == "disappointment") sub->add_option("--bounds", rka->bounds)->required();
        sub->callback([&rank_chosen, mode] { rank_chosen = mode; });
    }

    // ---- activate
    auto* act = app.add_subcommand("activate", "threshold-network activation check");
    std::string act_graph, act_thresholds;
    act->add_option("--graph", act_graph)->required();
    act->add_option("--thresholds", act_thresholds)->required();

    // ---- verify
    auto* ver = app.add_subcommand("verify", "independent re-check of claimed solutions");
    auto va = std::make_shared<VerifyArgs>();
    ver->add_option("--graph", va->graph)->required();
    ver->add_option("--bounds", va->bounds);
    ver->add_option("--claim", va->claim);
    ver->add_option("--order", va->order_text);
    ver->add_option("--family", va->family_text);
    ver->add_option("--kind", va->kind_text);
    ver->add_option("--mode", va->mode);
    ver->add_option("--roots", va->roots);
    ver->add_option("--S", va->s_list);
    ver->add_option("--T", va->t_list);
    ver->add_option("--s", va->s_end);
    ver->add_option("--t", va->t_end);
    ver->add_option("--root", va->root);
    ver->add_option("--d", va->dist);
    ver->add_option("--k", va->k);

    // ---- gen
    auto* gen = app.add_subcommand("gen", "seeded random digraphs");
    int gen_n = 0, gen_wmax = 0;
    std::optional<int> gen_m;
    std::optional<double> gen_p;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--m", gen_m);
    gen->add_option("--p", gen_p);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--wmax", gen_wmax);
    gen->add_option("--out", gen_out);

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*solve) return run_solve(solve_mode_chosen, *sa, out);

        if (*fam) {
            FamilyGoal flags = goal_from_flags(ArcFamilyKind::Acyclic, fa->roots, fa->root,
                                               fa->s_list, fa->t_list, fa->s_end, fa->t_end, 0);
            return run_order_family(fam_chosen, fa->graph, flags, fa->k, fa->cap, out);
        }

        if (*part) {
            auto kind = arc_family_kind_from_string(part_kind);
            if (!kind) throw SpecError("unknown family kind: " + part_kind);
            Digraph d = read_digraph_file(part_graph);
            json j;
            j["schema"] = "ordo/1";
            if (*kind == ArcFamilyKind::InBranching) {
                FamilyOrderResult r = order_in_branching(d, {});
                j = result_json(r.result);
                if (r.partition) j["partition"] = partition_json(*r.partition);
                return emit_result(out, r.result, j);
            }
            OracleConfig cfg = oracle_config(part_cap);
            PartitionResult pr = oracle_partition(d, *kind, cfg);
            j["feasible"] = pr.feasible;
            if (pr.feasible) j["partition"] = partition_json(pr.partition);
            return emit(out, j, pr.feasible ? 0 : 1);
        }

        if (*oracle) {
            Digraph d = read_digraph_file(oa->graph);
            OracleConfig cfg = oracle_config(oa->cap);
            if (oracle_chosen == "order") {
                OrderPredicate pred = [&]() -> OrderPredicate {
                    if (!oa->kind.empty()) {
                        auto kind = arc_family_kind_from_string(oa->kind);
                        if (!kind) throw SpecError("unknown family kind: " + oa->kind);
                        return FamilyPredicate{goal_from_flags(*kind, oa->roots, oa->root,
                                                               oa->s_list, oa->t_list, oa->s_end,
                                                               oa->t_end, oa->k)};
                    }
                    BoundsFile bf = oa->bounds.empty()
                                        ? BoundsFile{BoundSpec::none(d.vertex_count()), {}, {},
                                                     false, false, 1.0}
                                        : read_bounds_file(oa->bounds, d.vertex_count());
                    if (oa->dist >= 0) return DDistancePredicate{oa->dist, bf.fg.g, WeightMode::Arc};
                    if (!bf.m_delta.empty() && !bf.m_rho.empty())
                        return ExactPredicate{bf.m_delta, bf.m_rho};
                    return BoundsPredicate{bf.fg, WeightMode::Arc};
                }();
                SolveResult r = oracle_order(d, pred, cfg);
                return emit_result(out, r, result_json(r));
            }
            if (oracle_chosen == "partition") {
                auto kind = arc_family_kind_from_string(oa->kind);
                if (!kind) throw SpecError("unknown family kind: " + oa->kind);
                PartitionResult pr = oracle_partition(d, *kind, cfg);
                json j;
                j["schema"] = "ordo/1";
                j["feasible"] = pr.feasible;
                if (pr.feasible) j["partition"] = partition_json(pr.partition);
                return emit(out, j, pr.feasible ? 0 : 1);
            }
            if (oracle_chosen == "dec-min") {
                std::vector<double> g(static_cast<size_t>(d.vertex_count()), pos_inf);
                if (!oa->bounds.empty()) g = read_bounds_file(oa->bounds, d.vertex_count()).fg.g;
                DecreasingMinResult r = oracle_decreasing_min(d, g, cfg);
                json j;
                j["schema"] = "ordo/1";
                j["feasible"] = r.feasible;
                if (r.feasible) {
                    j["order"] = r.order;
                    j["value"] = r.sorted_degrees;
                }
                return emit(out, j, r.feasible ? 0 : 1);
            }
            if (oracle_chosen == "min-inbranching") {
                InBranchingCoverResult r = oracle_min_inbranching_cover(d, cfg);
                json j;
                j["schema"] = "ordo/1";
                j["feasible"] = r.feasible;
                if (r.feasible) {
                    j["value"] = r.size;
                    j["arcs"] = r.arcs;
                }
                return emit(out, j, r.feasible ? 0 : 1);
            }
            LexObjective obj;
            obj.side = oa->side == "left" ? LexObjective::Side::FromLeft
                                          : LexObjective::Side::FromRight;
            obj.sense = oa->sense == "min" ? LexObjective::Sense::Min : LexObjective::Sense::Max;
            LexResult r = oracle_lex(d, obj, cfg);
            json j;
            j["schema"] = "ordo/1";
            j["feasible"] = true;
            j["order"] = r.order;
            j["value"] = r.degrees;
            return emit(out, j, 0);
        }

        if (*reduce) {
            json j;
            j["schema"] = "ordo/1";
            std::vector<std::string> files;
            auto save = [&](const Digraph& d, const BoundSpec* bounds,
                            const std::vector<std::string>* tags) {
                std::string dg = ra->out_prefix + ".dg";
                write_text_file(dg, format_digraph(d));
                files.push_back(dg);
                if (bounds) {
                    std::string bp = ra->out_prefix + ".bounds.json";
                    write_text_file(bp, format_bounds(*bounds));
                    files.push_back(bp);
                }
                if (tags) {
                    std::string tp = ra->out_prefix + ".tags.json";
                    write_text_file(tp, format_tags(*tags));
                    files.push_back(tp);
                }
                j["vertices"] = d.vertex_count();
                j["arcs"] = d.arc_count();
            };
            if (reduce_chosen == "is" || reduce_chosen == "is-negw") {
                Digraph g = read_digraph_file(ra->graph);
                GadgetInstance inst = reduce_chosen == "is"
                                          ? gadget_independent_set(g, ra->k, ra->simple)
                                          : gadget_independent_set_negweight(g, ra->k);
                save(inst.digraph, &inst.bounds, &inst.tags);
            } else if (reduce_chosen == "3xsat3") {
                GadgetInstance inst = gadget_3xsat3(read_cnf_file(ra->cnf));
                save(inst.digraph, &inst.bounds, &inst.tags);
            } else if (reduce_chosen == "nae-matching") {
                GadgetInstance inst = gadget_nae3sat_matching(read_cnf_file(ra->cnf));
                save(inst.digraph, nullptr, &inst.tags);
            } else if (reduce_chosen == "nae-perfect") {
                GadgetInstance inst = gadget_nae3sat_perfect_matching(read_cnf_file(ra->cnf));
                save(inst.digraph, nullptr, &inst.tags);
            } else if (reduce_chosen == "split-arcs") {
                save(gadget_split_arcs(read_digraph_file(ra->graph)), nullptr, nullptr);
            } else if (reduce_chosen == "match-to-dipaths") {
                save(gadget_matching_to_dipaths(read_digraph_file(ra->graph)), nullptr, nullptr);
            } else if (reduce_chosen == "hampath-split") {
                save(gadget_hampath_split(read_digraph_file(ra->graph)), nullptr, nullptr);
            } else if (reduce_chosen == "1dist") {
                save(gadget_1distance(read_digraph_file(ra->graph)), nullptr, nullptr);
            } else if (reduce_chosen == "dist-lift") {
                save(gadget_distance_lift(read_digraph_file(ra->graph), ra->dist, ra->l), nullptr,
                     nullptr);
            }
            j["files"] = files;
            return emit(out, j, 0);
        }

        if (*rank) {
            RankingProfile profile = read_rankings_file(rka->rankings);
            json j;
            j["schema"] = "ordo/1";
            j["candidates"] = profile.candidate_names;
            if (rank_chosen == "penalty") {
                Digraph d = build_penalty_digraph(profile);
                json arcs = json::array();
                for (const Arc& a : d.arcs()) arcs.push_back(json::array({a.tail, a.head}));
                j["arcs"] = arcs;
                if (!rka->out_path.empty()) write_text_file(rka->out_path, format_digraph(d));
                return emit(out, j, 0);
            }
            if (rank_chosen == "minmax") {
                UnfairnessResult r = minmax_unfairness_order(profile);
                j["feasible"] = true;
                j["order"] = r.order;
                json names = json::array();
                for (int c : r.order) names.push_back(profile.candidate_names[static_cast<size_t>(c)]);
                j["order_names"] = names;
                j["value"] = r.max_phi;
                return emit(out, j, 0);
            }
            BoundsFile bf = read_bounds_file(rka->bounds, profile.num_candidates);
            SolveResult r = bounded_disappointment_order(profile, bf.fg.g);
            j.update(result_json(r));
            return emit_result(out, r, j);
        }

        if (*act) {
            Digraph d = read_digraph_file(act_graph);
            ThresholdSpec ts = read_thresholds_file(act_thresholds, d.vertex_count());
            ActivationResult r = check_activation({d, ts.tau, ts.seed});
            json j;
            j["schema"] = "ordo/1";
            j["feasible"] = r.fully_activates;
            if (r.fully_activates)
                j["order"] = r.activation_order;
            else
                j["witness"] = {{"type", "induced-set"}, {"vertices", r.blocked}, {"validated", true}};
            return emit(out, j, r.fully_activates ? 0 : 1);
        }

        if (*ver) return run_verify(*va, out);

        if (*gen) {
            if (gen_m && gen_p) throw SpecError("give either --m or --p, not both");
            Digraph d = gen_digraph(gen_n, gen_m, gen_p, gen_seed, gen_wmax);
            std::string text = format_digraph(d);
            if (!gen_out.empty()) {
                write_text_file(gen_out, text);
                json j;
                j["schema"] = "ordo/1";
                j["vertices"] = d.vertex_count();
                j["arcs"] = d.arc_count();
                j["files"] = json::array({gen_out});
                return emit(out, j, 0);
            }
            out << text;
            return 0;
        }
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FamilyViolation& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed claim: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace ordo::cli
