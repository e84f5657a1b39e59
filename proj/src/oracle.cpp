#include "ordo/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ordo {

namespace {

double arc_weight(const Digraph& d, ArcId a, WeightMode mode) {
    return mode == WeightMode::Arc ? d.arc(a).weight : 1.0;
}

void check_order_cap(const Digraph& d, const OracleConfig& cfg) {
    if (d.vertex_count() > cfg.order_cap)
        throw CapExceeded("permutation oracle cap exceeded (n = " +
                          std::to_string(d.vertex_count()) +
                          ", cap = " + std::to_string(cfg.order_cap) + ")");
}

// --- search engines -------------------------------------------------------
//
// Each engine exposes: pre() static screen, try_place(v) check-and-commit for
// the next position, undo(v), dead() global prune after a commit, and
// complete() leaf validation. delta_left(v) is final the moment v is placed,
// which both the placement checks and the g-side global prune exploit.

struct InfSum {
    double fin = 0;
    int infs = 0;
    void add(double w) {
        if (w == pos_inf)
            ++infs;
        else
            fin += w;
    }
    void sub(double w) {
        if (w == pos_inf)
            --infs;
        else
            fin -= w;
    }
    double value() const { return infs > 0 ? pos_inf : fin; }
};

class BoundsEngine {
  public:
    BoundsEngine(const Digraph& d, const std::vector<double>& f, const std::vector<double>& g,
                 WeightMode mode)
        : d_(d), f_(f), g_(g), mode_(mode) {
        const size_t n = static_cast<size_t>(d.vertex_count());
        cnt_.resize(n);
        placed_.assign(n, false);
        over_g_.assign(n, false);
        has_neg_out_.assign(n, false);
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            for (ArcId a : d.out_arcs(v))
                if (arc_weight(d, a, mode_) < 0) has_neg_out_[static_cast<size_t>(v)] = true;
    }

    bool pre() const {
        // delta_left_w(v) always lies between the negative and the positive
        // part of v's out-weights, whatever the order
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            InfSum pos;
            double neg = 0;
            for (ArcId a : d_.out_arcs(v)) {
                double w = arc_weight(d_, a, mode_);
                if (w < 0)
                    neg += w;
                else
                    pos.add(w);
            }
            if (pos.value() < f_[static_cast<size_t>(v)]) return false;
            if (neg > g_[static_cast<size_t>(v)]) return false;
        }
        return true;
    }

    bool try_place(Vertex v, int) {
        double val = cnt_[static_cast<size_t>(v)].value();
        if (val > g_[static_cast<size_t>(v)] || val < f_[static_cast<size_t>(v)]) return false;
        placed_[static_cast<size_t>(v)] = true;
        for (ArcId a : d_.in_arcs(v)) {
            Vertex t = d_.arc(a).tail;
            if (placed_[static_cast<size_t>(t)]) continue;
            cnt_[static_cast<size_t>(t)].add(arc_weight(d_, a, mode_));
            update_flag(t);
        }
        return true;
    }

    void undo(Vertex v, int) {
        placed_[static_cast<size_t>(v)] = false;
        for (ArcId a : d_.in_arcs(v)) {
            Vertex t = d_.arc(a).tail;
            if (placed_[static_cast<size_t>(t)]) continue;
            cnt_[static_cast<size_t>(t)].sub(arc_weight(d_, a, mode_));
            update_flag(t);
        }
    }

    bool dead() const { return violations_ > 0; }
    bool complete() const { return true; }

  private:
    // with non-negative out-weights the count into the placed set only grows,
    // so exceeding g is permanent; a vertex with negative out-arcs can
    // recover and is never flagged
    void update_flag(Vertex t) {
        bool now = !has_neg_out_[static_cast<size_t>(t)] &&
                   cnt_[static_cast<size_t>(t)].value() > g_[static_cast<size_t>(t)];
        if (now != over_g_[static_cast<size_t>(t)]) {
            over_g_[static_cast<size_t>(t)] = now;
            violations_ += now ? 1 : -1;
        }
    }

    const Digraph& d_;
    const std::vector<double>& f_;
    const std::vector<double>& g_;
    WeightMode mode_;
    std::vector<InfSum> cnt_;  // weighted outdegree into the placed set
    std::vector<bool> placed_;
    std::vector<bool> over_g_;
    std::vector<bool> has_neg_out_;
    int violations_ = 0;
};

// delta_left within [f_delta, g_delta] and rho_right within [f_rho, g_rho],
// unweighted. rho_right of a placed vertex grows as later in-neighbors are
// placed and is final only at the leaf.
class SimultaneousEngine {
  public:
    SimultaneousEngine(const Digraph& d, std::vector<double> fd, std::vector<double> gd,
                       std::vector<double> fr, std::vector<double> gr)
        : d_(d), fd_(std::move(fd)), gd_(std::move(gd)), fr_(std::move(fr)), gr_(std::move(gr)) {
        const size_t n = static_cast<size_t>(d.vertex_count());
        delta_cnt_.assign(n, 0);
        rho_now_.assign(n, 0);
        in_rem_.assign(n, 0);
        placed_.assign(n, false);
        bad_.assign(n, false);
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            in_rem_[static_cast<size_t>(v)] = d.in_degree(v);
    }

    bool pre() const {
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            size_t i = static_cast<size_t>(v);
            if (d_.out_degree(v) < fd_[i]) return false;
            if (d_.in_degree(v) < fr_[i]) return false;
        }
        return true;
    }

    bool try_place(Vertex v, int) {
        size_t i = static_cast<size_t>(v);
        if (delta_cnt_[i] > gd_[i] || delta_cnt_[i] < fd_[i]) return false;
        placed_[i] = true;
        // v's out-arcs: the head loses an unplaced in-neighbor, and a placed
        // head gains one rho_right (the new arc comes from later)
        for (ArcId a : d_.out_arcs(v)) {
            Vertex h = d_.arc(a).head;
            size_t hi = static_cast<size_t>(h);
            --in_rem_[hi];
            if (placed_[hi]) ++rho_now_[hi];
            update_flag(h);
        }
        // v's in-arcs from unplaced tails: their eventual delta_left grows
        for (ArcId a : d_.in_arcs(v)) {
            Vertex t = d_.arc(a).tail;
            size_t ti = static_cast<size_t>(t);
            if (!placed_[ti]) {
                ++delta_cnt_[ti];
                if (delta_cnt_[ti] > gd_[ti]) return_dead_ = true;
            }
        }
        update_flag(v);
        return true;
    }

    void undo(Vertex v, int) {
        for (ArcId a : d_.in_arcs(v)) {
            Vertex t = d_.arc(a).tail;
            if (!placed_[static_cast<size_t>(t)]) --delta_cnt_[static_cast<size_t>(t)];
        }
        for (ArcId a : d_.out_arcs(v)) {
            Vertex h = d_.arc(a).head;
            size_t hi = static_cast<size_t>(h);
            ++in_rem_[hi];
            if (placed_[hi]) --rho_now_[hi];
            update_flag(h);
        }
        placed_[static_cast<size_t>(v)] = false;
        update_flag(v);
        recompute_dead();
    }

    bool dead() const { return return_dead_ || violations_ > 0; }

    bool complete() const {
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            size_t i = static_cast<size_t>(v);
            if (rho_now_[i] < fr_[i] || rho_now_[i] > gr_[i]) return false;
        }
        return true;
    }

  private:
    // placed v is irretrievably bad once rho_right exceeded its upper bound
    // or cannot reach its lower bound with the in-arcs still unplaced
    void update_flag(Vertex v) {
        size_t i = static_cast<size_t>(v);
        bool now = placed_[i] &&
                   (rho_now_[i] > gr_[i] || rho_now_[i] + in_rem_[i] < fr_[i]);
        if (now != bad_[i]) {
            bad_[i] = now;
            violations_ += now ? 1 : -1;
        }
    }

    void recompute_dead() {
        // delta overflow flags are cheap to recompute lazily on undo
        return_dead_ = false;
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            size_t i = static_cast<size_t>(v);
            if (!placed_[i] && delta_cnt_[i] > gd_[i]) {
                return_dead_ = true;
                return;
            }
        }
    }

    const Digraph& d_;
    std::vector<double> fd_, gd_, fr_, gr_;
    std::vector<int> delta_cnt_;  // outdegree into the placed set
    std::vector<int> rho_now_;    // in-arcs from vertices placed later
    std::vector<int> in_rem_;     // in-arcs whose tail is unplaced
    std::vector<bool> placed_;
    std::vector<bool> bad_;
    int violations_ = 0;
    bool return_dead_ = false;
};

class DDistanceEngine {
  public:
    DDistanceEngine(const Digraph& d, int dist, const std::vector<double>& g, WeightMode mode)
        : d_(d), dist_(dist), g_(g), mode_(mode) {
        pos_.assign(static_cast<size_t>(d.vertex_count()), -1);
    }

    bool pre() const { return true; }

    bool try_place(Vertex v, int i) {
        InfSum win;
        for (ArcId a : d_.out_arcs(v)) {
            int ph = pos_[static_cast<size_t>(d_.arc(a).head)];
            if (ph >= 0 && i - ph <= dist_) win.add(arc_weight(d_, a, mode_));
        }
        if (win.value() > g_[static_cast<size_t>(v)]) return false;
        pos_[static_cast<size_t>(v)] = i;
        return true;
    }

    void undo(Vertex v, int) { pos_[static_cast<size_t>(v)] = -1; }
    bool dead() const { return false; }
    bool complete() const { return true; }

  private:
    const Digraph& d_;
    int dist_;
    const std::vector<double>& g_;
    WeightMode mode_;
    std::vector<int> pos_;
};

// Prunes on the monotone local constraints of the family; the authoritative
// membership test runs once per leaf via satisfies_family.
class FamilyEngine {
  public:
    FamilyEngine(const Digraph& d, const FamilyGoal& goal) : d_(d), goal_(goal) {
        const size_t n = static_cast<size_t>(d.vertex_count());
        placed_.assign(n, false);
        left_out_.assign(n, 0);
        left_in_.assign(n, 0);
        touched_.assign(n, 0);
        switch (goal.kind) {
            case ArcFamilyKind::InBranching:
            case ArcFamilyKind::InArborescence:
                out_cap_ = 1;
                break;
            case ArcFamilyKind::DisjointDipaths:
            case ArcFamilyKind::Dipath:
            case ArcFamilyKind::HamiltonianDipath:
                out_cap_ = 1;
                in_cap_ = 1;
                break;
            case ArcFamilyKind::Matching:
            case ArcFamilyKind::PerfectMatching:
                touch_cap_ = 1;
                break;
            case ArcFamilyKind::Acyclic:
                break;
        }
    }

    bool pre() const { return true; }

    bool try_place(Vertex v, int) {
        // left arcs gained by placing v: all arcs from v to placed heads
        int new_out = 0;
        for (ArcId a : d_.out_arcs(v))
            if (placed_[static_cast<size_t>(d_.arc(a).head)]) ++new_out;
        if (new_out > out_cap_) return false;
        if (touch_cap_ == 1 && new_out > 0) {
            if (touched_[static_cast<size_t>(v)] + new_out > 1) return false;
            for (ArcId a : d_.out_arcs(v)) {
                Vertex h = d_.arc(a).head;
                if (placed_[static_cast<size_t>(h)] && touched_[static_cast<size_t>(h)] >= 1)
                    return false;
            }
        }
        if (in_cap_ == 1)
            for (ArcId a : d_.out_arcs(v)) {
                Vertex h = d_.arc(a).head;
                if (placed_[static_cast<size_t>(h)] && left_in_[static_cast<size_t>(h)] >= 1)
                    return false;
            }
        placed_[static_cast<size_t>(v)] = true;
        left_out_[static_cast<size_t>(v)] = new_out;
        for (ArcId a : d_.out_arcs(v)) {
            Vertex h = d_.arc(a).head;
            if (!placed_[static_cast<size_t>(h)] || h == v) continue;
            ++left_in_[static_cast<size_t>(h)];
            ++touched_[static_cast<size_t>(h)];
        }
        if (new_out > 0) touched_[static_cast<size_t>(v)] += new_out;
        order_stack_.push_back(v);
        return true;
    }

    void undo(Vertex v, int) {
        order_stack_.pop_back();
        placed_[static_cast<size_t>(v)] = false;
        for (ArcId a : d_.out_arcs(v)) {
            Vertex h = d_.arc(a).head;
            if (!placed_[static_cast<size_t>(h)]) continue;
            --left_in_[static_cast<size_t>(h)];
            --touched_[static_cast<size_t>(h)];
        }
        if (left_out_[static_cast<size_t>(v)] > 0)
            touched_[static_cast<size_t>(v)] -= left_out_[static_cast<size_t>(v)];
        left_out_[static_cast<size_t>(v)] = 0;
    }

    bool dead() const { return false; }

    bool complete() const {
        return satisfies_family(d_, left_arcs(d_, order_stack_), goal_);
    }

  private:
    const Digraph& d_;
    FamilyGoal goal_;
    std::vector<bool> placed_;
    std::vector<int> left_out_, left_in_, touched_;
    VertexOrder order_stack_;
    int out_cap_ = 1 << 28;
    int in_cap_ = 1 << 28;
    int touch_cap_ = 1 << 28;
};

template <class Engine>
std::optional<VertexOrder> search_first(const Digraph& d, Engine& engine) {
    const int n = d.vertex_count();
    if (!engine.pre()) return std::nullopt;
    std::vector<bool> used(static_cast<size_t>(n), false);
    VertexOrder order(static_cast<size_t>(n));
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return engine.complete();
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (!engine.try_place(v, i)) continue;
            used[static_cast<size_t>(v)] = true;
            order[static_cast<size_t>(i)] = v;
            if (!engine.dead() && self(self, i + 1)) return true;
            used[static_cast<size_t>(v)] = false;
            engine.undo(v, i);
        }
        return false;
    };
    if (dfs(dfs, 0)) return order;
    return std::nullopt;
}

std::vector<double> to_double(const std::vector<int>& xs) {
    return std::vector<double>(xs.begin(), xs.end());
}

std::optional<VertexOrder> run_search(const Digraph& d, const OrderPredicate& pred) {
    const int n = d.vertex_count();
    if (auto* p = std::get_if<BoundsPredicate>(&pred)) {
        BoundsEngine e(d, p->bounds.f, p->bounds.g, p->mode);
        return search_first(d, e);
    }
    if (auto* p = std::get_if<FamilyPredicate>(&pred)) {
        FamilyEngine e(d, p->goal);
        return search_first(d, e);
    }
    if (auto* p = std::get_if<DDistancePredicate>(&pred)) {
        DDistanceEngine e(d, p->dist, p->g, p->mode);
        return search_first(d, e);
    }
    if (auto* p = std::get_if<ExactPredicate>(&pred)) {
        std::vector<double> md = to_double(p->m_delta), mr = to_double(p->m_rho);
        SimultaneousEngine e(d, md, md, mr, mr);
        return search_first(d, e);
    }
    const auto& p = std::get<SimultaneousPredicate>(pred);
    auto fill = [&](const std::vector<double>& xs, double dflt) {
        return xs.empty() ? std::vector<double>(static_cast<size_t>(n), dflt) : xs;
    };
    SimultaneousEngine e(d, fill(p.f_delta, neg_inf), fill(p.g_delta, pos_inf),
                         fill(p.f_rho, neg_inf), fill(p.g_rho, pos_inf));
    return search_first(d, e);
}

}  // namespace

bool evaluate_order(const Digraph& d, const OrderPredicate& pred, const VertexOrder& order) {
    const int n = d.vertex_count();
    if (auto* p = std::get_if<DDistancePredicate>(&pred)) {
        std::vector<double> win = d_distance_window_degrees(d, order, p->dist, p->mode);
        for (Vertex v = 0; v < n; ++v)
            if (win[static_cast<size_t>(v)] > p->g[static_cast<size_t>(v)]) return false;
        return true;
    }
    if (auto* p = std::get_if<FamilyPredicate>(&pred))
        return satisfies_family(d, left_arcs(d, order), p->goal);

    DegreeProfile prof = degree_profile(d, order);
    if (auto* p = std::get_if<BoundsPredicate>(&pred)) {
        for (Vertex v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            double val = p->mode == WeightMode::Arc ? prof.delta_left_w[i]
                                                    : static_cast<double>(prof.delta_left[i]);
            if (val < p->bounds.f[i] || val > p->bounds.g[i]) return false;
        }
        return true;
    }
    if (auto* p = std::get_if<ExactPredicate>(&pred)) {
        for (Vertex v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            if (prof.delta_left[i] != p->m_delta[i] || prof.rho_right[i] != p->m_rho[i])
                return false;
        }
        return true;
    }
    const auto& p = std::get<SimultaneousPredicate>(pred);
    auto within = [&](const std::vector<int>& vals, const std::vector<double>& lo,
                      const std::vector<double>& hi) {
        for (int v = 0; v < n; ++v) {
            size_t i = static_cast<size_t>(v);
            double x = vals[i];
            if (!lo.empty() && x < lo[i]) return false;
            if (!hi.empty() && x > hi[i]) return false;
        }
        return true;
    };
    return within(prof.delta_left, p.f_delta, p.g_delta) &&
           within(prof.rho_right, p.f_rho, p.g_rho);
}

SolveResult oracle_order(const Digraph& d, const OrderPredicate& pred, const OracleConfig& cfg) {
    check_order_cap(d, cfg);
    if (auto order = run_search(d, pred)) return make_feasible(d, std::move(*order));
    return Infeasible{std::nullopt, "exhaustive search found no satisfying order"};
}

// --- optimizing oracles ----------------------------------------------------

DecreasingMinResult oracle_decreasing_min(const Digraph& d, const std::vector<double>& g,
                                          const OracleConfig& cfg) {
    check_order_cap(d, cfg);
    const int n = d.vertex_count();
    if (static_cast<int>(g.size()) != n) throw SpecError("g must have one entry per vertex");

    DecreasingMinResult best;
    std::vector<bool> used(static_cast<size_t>(n), false);
    VertexOrder order(static_cast<size_t>(n));
    std::vector<int> dl(static_cast<size_t>(n), 0);  // delta_left per position
    std::vector<int> cnt(static_cast<size_t>(n), 0);

    auto dfs = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<int> sorted(dl);
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            if (!best.feasible || sorted < best.sorted_degrees) {
                best.feasible = true;
                best.order = order;
                best.sorted_degrees = std::move(sorted);
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (cnt[static_cast<size_t>(v)] > g[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            order[static_cast<size_t>(i)] = v;
            dl[static_cast<size_t>(i)] = cnt[static_cast<size_t>(v)];
            for (ArcId a : d.in_arcs(v))
                if (!used[static_cast<size_t>(d.arc(a).tail)])
                    ++cnt[static_cast<size_t>(d.arc(a).tail)];
            self(self, i + 1);
            for (ArcId a : d.in_arcs(v))
                if (!used[static_cast<size_t>(d.arc(a).tail)])
                    --cnt[static_cast<size_t>(d.arc(a).tail)];
            used[static_cast<size_t>(v)] = false;
        }
    };
    dfs(dfs, 0);
    return best;
}

namespace {

// Arcs lying on at least one directed cycle: head reaches tail.
std::vector<ArcId> cycle_arcs(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                         std::vector<bool>(static_cast<size_t>(n), false));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        reach[static_cast<size_t>(s)][static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (ArcId a : d.out_arcs(v)) {
                Vertex h = d.arc(a).head;
                if (!reach[static_cast<size_t>(s)][static_cast<size_t>(h)]) {
                    reach[static_cast<size_t>(s)][static_cast<size_t>(h)] = true;
                    stack.push_back(h);
                }
            }
        }
    }
    std::vector<ArcId> res;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (reach[static_cast<size_t>(d.arc(a).head)][static_cast<size_t>(d.arc(a).tail)])
            res.push_back(a);
    return res;
}

bool family_subset_closed(ArcFamilyKind kind) {
    switch (kind) {
        case ArcFamilyKind::InBranching:
        case ArcFamilyKind::Matching:
        case ArcFamilyKind::DisjointDipaths:
        case ArcFamilyKind::Acyclic:
            return true;
        default:
            return false;
    }
}

// Backtracking partition search: include an arc into the family part (local
// family pruning) or commit it to the remainder (which must stay acyclic).
struct PartitionSearch {
    const Digraph& d;
    ArcFamilyKind kind;
    std::vector<ArcId> domain;
    std::vector<bool> in_domain;
    std::vector<std::vector<Vertex>> rem_adj;  // definite remainder adjacency
    std::vector<int> out_cnt, in_cnt, touch_cnt;
    std::vector<ArcId> chosen;
    int target_size = -1;  // PerfectMatching / Ham / InArb fixed sizes

    explicit PartitionSearch(const Digraph& dg, ArcFamilyKind k) : d(dg), kind(k) {
        const size_t n = static_cast<size_t>(d.vertex_count());
        rem_adj.resize(n);
        out_cnt.assign(n, 0);
        in_cnt.assign(n, 0);
        touch_cnt.assign(n, 0);
        domain = family_subset_closed(kind)
                     ? cycle_arcs(d)
                     : [&] {
                           std::vector<ArcId> all(static_cast<size_t>(d.arc_count()));
                           std::iota(all.begin(), all.end(), 0);
                           return all;
                       }();
        in_domain.assign(static_cast<size_t>(d.arc_count()), false);
        for (ArcId a : domain) in_domain[static_cast<size_t>(a)] = true;
        for (ArcId a = 0; a < d.arc_count(); ++a)
            if (!in_domain[static_cast<size_t>(a)])
                rem_adj[static_cast<size_t>(d.arc(a).tail)].push_back(d.arc(a).head);
        if (kind == ArcFamilyKind::PerfectMatching)
            target_size = d.vertex_count() % 2 == 0 ? d.vertex_count() / 2 : -2;
        else if (kind == ArcFamilyKind::HamiltonianDipath || kind == ArcFamilyKind::InArborescence)
            target_size = d.vertex_count() <= 1 ? 0 : d.vertex_count() - 1;
    }

    bool remainder_path(Vertex from, Vertex to) const {
        std::vector<bool> vis(static_cast<size_t>(d.vertex_count()), false);
        std::vector<Vertex> stack{from};
        vis[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (Vertex h : rem_adj[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(h)]) {
                    vis[static_cast<size_t>(h)] = true;
                    stack.push_back(h);
                }
        }
        return false;
    }

    // chosen-set path query over the family part (for acyclicity of chosen)
    bool chosen_path(Vertex from, Vertex to) const {
        std::vector<bool> vis(static_cast<size_t>(d.vertex_count()), false);
        std::vector<Vertex> stack{from};
        vis[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (ArcId a : chosen) {
                if (d.arc(a).tail != v) continue;
                Vertex h = d.arc(a).head;
                if (!vis[static_cast<size_t>(h)]) {
                    vis[static_cast<size_t>(h)] = true;
                    stack.push_back(h);
                }
            }
        }
        return false;
    }

    bool include_allowed(ArcId a) const {
        Vertex t = d.arc(a).tail, h = d.arc(a).head;
        size_t ti = static_cast<size_t>(t), hi = static_cast<size_t>(h);
        if (target_size >= 0 && static_cast<int>(chosen.size()) >= target_size) return false;
        if (target_size == -2) return false;
        switch (kind) {
            case ArcFamilyKind::Acyclic:
                return !chosen_path(h, t);
            case ArcFamilyKind::InBranching:
            case ArcFamilyKind::InArborescence:
                return out_cnt[ti] == 0 && !chosen_path(h, t);
            case ArcFamilyKind::Matching:
            case ArcFamilyKind::PerfectMatching:
                return touch_cnt[ti] == 0 && touch_cnt[hi] == 0;
            case ArcFamilyKind::DisjointDipaths:
            case ArcFamilyKind::Dipath:
            case ArcFamilyKind::HamiltonianDipath:
                return out_cnt[ti] == 0 && in_cnt[hi] == 0 && !chosen_path(h, t);
        }
        return false;
    }

    std::optional<std::vector<ArcId>> run() {
        if (static_cast<int>(domain.size()) >
            (1 << 30))  // unreachable; cap enforced by caller
            return std::nullopt;
        if (target_size == -2) return std::nullopt;  // odd n, perfect matching
        std::optional<std::vector<ArcId>> found;
        auto dfs = [&](auto&& self, size_t idx) -> bool {
            if (idx == domain.size()) {
                if (target_size >= 0 && static_cast<int>(chosen.size()) != target_size)
                    return false;
                if (!classify_arc_set(d, chosen, kind)) return false;
                found = chosen;
                return true;
            }
            ArcId a = domain[idx];
            Vertex t = d.arc(a).tail, h = d.arc(a).head;
            // decline: the arc joins the remainder, which must stay acyclic
            int slack = static_cast<int>(domain.size() - idx - 1);
            bool size_ok_decline =
                target_size < 0 || static_cast<int>(chosen.size()) + slack >= target_size;
            if (size_ok_decline && !remainder_path(h, t)) {
                rem_adj[static_cast<size_t>(t)].push_back(h);
                if (self(self, idx + 1)) return true;
                rem_adj[static_cast<size_t>(t)].pop_back();
            }
            // include into the family part
            if (include_allowed(a)) {
                chosen.push_back(a);
                ++out_cnt[static_cast<size_t>(t)];
                ++in_cnt[static_cast<size_t>(h)];
                ++touch_cnt[static_cast<size_t>(t)];
                ++touch_cnt[static_cast<size_t>(h)];
                if (self(self, idx + 1)) return true;
                chosen.pop_back();
                --out_cnt[static_cast<size_t>(t)];
                --in_cnt[static_cast<size_t>(h)];
                --touch_cnt[static_cast<size_t>(t)];
                --touch_cnt[static_cast<size_t>(h)];
            }
            return false;
        };
        if (dfs(dfs, 0)) return found;
        return std::nullopt;
    }
};

}  // namespace

PartitionResult oracle_partition(const Digraph& d, ArcFamilyKind kind, const OracleConfig& cfg) {
    PartitionSearch search(d, kind);
    if (static_cast<int>(search.domain.size()) > cfg.partition_cap)
        throw CapExceeded("partition oracle cap exceeded (" +
                          std::to_string(search.domain.size()) + " candidate arcs, cap = " +
                          std::to_string(cfg.partition_cap) + ")");
    auto family = search.run();
    PartitionResult res;
    if (!family) return res;
    res.feasible = true;
    res.partition.kind = kind;
    res.partition.family_arcs = std::move(*family);
    std::sort(res.partition.family_arcs.begin(), res.partition.family_arcs.end());
    std::vector<bool> in_family(static_cast<size_t>(d.arc_count()), false);
    for (ArcId a : res.partition.family_arcs) in_family[static_cast<size_t>(a)] = true;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (!in_family[static_cast<size_t>(a)]) res.partition.acyclic_arcs.push_back(a);
    return res;
}

InBranchingCoverResult oracle_min_inbranching_cover(const Digraph& d, const OracleConfig& cfg) {
    std::vector<ArcId> domain = cycle_arcs(d);
    if (static_cast<int>(domain.size()) > cfg.partition_cap)
        throw CapExceeded("in-branching cover oracle cap exceeded (" +
                          std::to_string(domain.size()) + " candidate arcs, cap = " +
                          std::to_string(cfg.partition_cap) + ")");
    const int n = d.vertex_count();

    // an in-branching that is inclusion-minimal as a cycle cover uses only
    // arcs on cycles; stage the search by target size, lexicographic
    // combinations first, so the first hit is the lex-smallest minimum
    std::vector<bool> in_domain(static_cast<size_t>(d.arc_count()), false);
    for (ArcId a : domain) in_domain[static_cast<size_t>(a)] = true;

    std::vector<ArcId> chosen;
    std::vector<int> out_cnt(static_cast<size_t>(n), 0);
    std::vector<bool> dropped(static_cast<size_t>(d.arc_count()), false);

    auto chosen_path = [&](Vertex from, Vertex to) {
        std::vector<bool> vis(static_cast<size_t>(n), false);
        std::vector<Vertex> stack{from};
        vis[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (ArcId a : chosen) {
                Vertex h = d.arc(a).head;
                if (d.arc(a).tail == v && !vis[static_cast<size_t>(h)]) {
                    vis[static_cast<size_t>(h)] = true;
                    stack.push_back(h);
                }
            }
        }
        return false;
    };
    auto remainder_acyclic = [&]() {
        std::vector<ArcId> rest;
        for (ArcId a = 0; a < d.arc_count(); ++a)
            if (!dropped[static_cast<size_t>(a)]) rest.push_back(a);
        return classify_arc_set(d, rest, ArcFamilyKind::Acyclic);
    };

    InBranchingCoverResult best;
    auto dfs = [&](auto&& self, size_t from, int want) -> bool {
        if (want == 0) {
            if (!classify_arc_set(d, chosen, ArcFamilyKind::InBranching)) return false;
            return remainder_acyclic();
        }
        for (size_t idx = from; idx + static_cast<size_t>(want) <= domain.size(); ++idx) {
            ArcId a = domain[idx];
            Vertex t = d.arc(a).tail, h = d.arc(a).head;
            if (out_cnt[static_cast<size_t>(t)] > 0) continue;
            if (chosen_path(h, t)) continue;
            chosen.push_back(a);
            dropped[static_cast<size_t>(a)] = true;
            ++out_cnt[static_cast<size_t>(t)];
            if (self(self, idx + 1, want - 1)) return true;
            chosen.pop_back();
            dropped[static_cast<size_t>(a)] = false;
            --out_cnt[static_cast<size_t>(t)];
        }
        return false;
    };

    const int max_size = std::min<int>(static_cast<int>(domain.size()), std::max(0, n - 1));
    for (int s = 0; s <= max_size; ++s) {
        if (dfs(dfs, 0, s)) {
            best.feasible = true;
            best.size = s;
            best.arcs = chosen;
            std::sort(best.arcs.begin(), best.arcs.end());
            return best;
        }
    }
    return best;
}

LexResult oracle_lex(const Digraph& d, const LexObjective& obj, const OracleConfig& cfg) {
    check_order_cap(d, cfg);
    const int n = d.vertex_count();

    LexResult best;
    bool have_best = false;
    std::vector<bool> used(static_cast<size_t>(n), false);
    VertexOrder order(static_cast<size_t>(n));
    std::vector<int> dl(static_cast<size_t>(n), 0);
    std::vector<int> cnt(static_cast<size_t>(n), 0);

    const bool want_min = obj.sense == LexObjective::Sense::Min;
    auto key_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (obj.side == LexObjective::Side::FromLeft)
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    };
    auto improves = [&](const std::vector<int>& cand) {
        if (!have_best) return true;
        return want_min ? key_less(cand, best.degrees) : key_less(best.degrees, cand);
    };

    auto dfs = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (improves(dl)) {
                have_best = true;
                best.order = order;
                best.degrees = dl;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            order[static_cast<size_t>(i)] = v;
            dl[static_cast<size_t>(i)] = cnt[static_cast<size_t>(v)];
            // the prefix of the FromLeft key is final: skip branches that can
            // no longer beat (min) / reach (max) the incumbent
            bool prune = false;
            if (have_best && obj.side == LexObjective::Side::FromLeft) {
                int mine = dl[static_cast<size_t>(i)], theirs = best.degrees[static_cast<size_t>(i)];
                bool prefix_equal = true;
                for (int j = 0; j < i && prefix_equal; ++j)
                    if (dl[static_cast<size_t>(j)] != best.degrees[static_cast<size_t>(j)])
                        prefix_equal = false;
                if (prefix_equal) prune = want_min ? mine > theirs : mine < theirs;
            }
            if (!prune) {
                for (ArcId a : d.in_arcs(v))
                    if (!used[static_cast<size_t>(d.arc(a).tail)])
                        ++cnt[static_cast<size_t>(d.arc(a).tail)];
                self(self, i + 1);
                for (ArcId a : d.in_arcs(v))
                    if (!used[static_cast<size_t>(d.arc(a).tail)])
                        --cnt[static_cast<size_t>(d.arc(a).tail)];
            }
            used[static_cast<size_t>(v)] = false;
        }
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace ordo
