#ifndef ORDO_RESULT_HPP
#define ORDO_RESULT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordo/digraph.hpp"

namespace ordo {

// Per-vertex lower/upper bounds on ordering degrees. Infeasible combinations
// (f > g somewhere) are legal inputs.
struct BoundSpec {
    std::vector<double> f;  // lower, default -inf
    std::vector<double> g;  // upper, default +inf

    static BoundSpec none(int n) {
        return BoundSpec{std::vector<double>(static_cast<size_t>(n), neg_inf),
                         std::vector<double>(static_cast<size_t>(n), pos_inf)};
    }
    static BoundSpec upper_only(std::vector<double> g) {
        BoundSpec b = none(static_cast<int>(g.size()));
        b.g = std::move(g);
        return b;
    }
    static BoundSpec lower_only(std::vector<double> f) {
        BoundSpec b = none(static_cast<int>(f.size()));
        b.f = std::move(f);
        return b;
    }
    static BoundSpec uniform_upper(int n, double g) {
        return upper_only(std::vector<double>(static_cast<size_t>(n), g));
    }
    static BoundSpec uniform_lower(int n, double f) {
        return lower_only(std::vector<double>(static_cast<size_t>(n), f));
    }
};

enum class WitnessKind {
    InducedSet,   // induced subgraph violating the gChar/fChar condition
    CutSet,       // < k vertices meeting every S-T dipath
    StuckSet,     // final frontier of a greedy/search run
    SumMismatch,  // sum of exact out-prescriptions != sum of in-prescriptions
};

struct Witness {
    WitnessKind kind = WitnessKind::StuckSet;
    std::vector<Vertex> vertices;  // sorted ascending
    int k = 0;                     // CutSet: the required dipath count
    long long lhs = 0, rhs = 0;    // SumMismatch sums
    // True when the witness type carries a paper-backed characterization that
    // verify re-checks; stuck sets from greedy solvers are reported as-is.
    bool validated = false;

    static Witness induced_set(std::vector<Vertex> vs);
    static Witness cut_set(std::vector<Vertex> vs, int k);
    static Witness stuck_set(std::vector<Vertex> vs, bool validated = false);
    static Witness sum_mismatch(long long lhs, long long rhs);
};

struct Feasible {
    VertexOrder order;
    DegreeProfile profile;
};

struct Infeasible {
    std::optional<Witness> witness;
    std::string reason;  // optional human-readable diagnostic
};

using SolveResult = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const SolveResult& r) { return std::holds_alternative<Feasible>(r); }
inline const Feasible& feasible(const SolveResult& r) { return std::get<Feasible>(r); }
inline const Infeasible& infeasible(const SolveResult& r) { return std::get<Infeasible>(r); }

SolveResult make_feasible(const Digraph& d, VertexOrder order);

}  // namespace ordo

#endif
