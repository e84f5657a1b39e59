#include <doctest.h>

#include <random>

#include "ordo/digraph.hpp"
#include "ordo/simultaneous.hpp"
#include "support.hpp"

using namespace ordo;
using namespace ordo::test;

namespace {

std::vector<double> uni(int n, double v) { return std::vector<double>(static_cast<size_t>(n), v); }

bool meets_out_upper_in_lower(const Digraph& d, const VertexOrder& o, const std::vector<double>& g,
                              const std::vector<double>& f) {
    DegreeProfile p = degree_profile(d, o);
    for (int v = 0; v < d.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (p.delta_left[i] > g[i] || p.rho_right[i] < f[i]) return false;
    }
    return true;
}

bool meets_out_lower_in_upper(const Digraph& d, const VertexOrder& o, const std::vector<double>& f,
                              const std::vector<double>& g) {
    DegreeProfile p = degree_profile(d, o);
    for (int v = 0; v < d.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (p.delta_left[i] < f[i] || p.rho_right[i] > g[i]) return false;
    }
    return true;
}

std::vector<double> random_bounds(std::mt19937_64& rng, int n, double top) {
    std::vector<double> b(static_cast<size_t>(n));
    for (auto& x : b) {
        int pick = static_cast<int>(rng() % 4);
        x = pick == 3 ? top : pick;
    }
    return b;
}

}  // namespace

TEST_CASE("out-upper / in-lower greedy") {
    SUBCASE("triangle is fine with slack bounds") {
        CHECK(is_feasible(solve_out_upper_in_lower(triangle(), uni(3, 1), uni(3, 0))));
    }
    SUBCASE("no arcs cannot give everyone right-indegree 1") {
        SolveResult r = solve_out_upper_in_lower(make(2, {}), uni(2, pos_inf), uni(2, 1));
        REQUIRE_FALSE(is_feasible(r));
        CHECK(infeasible(r).witness->kind == WitnessKind::StuckSet);
        CHECK_FALSE(infeasible(r).witness->validated);
    }
    SUBCASE("2-cycle with g_delta == 0 is stuck") {
        Digraph d = make(2, {{0, 1}, {1, 0}});
        CHECK_FALSE(is_feasible(solve_out_upper_in_lower(d, uni(2, 0), uni(2, neg_inf))));
    }
}

TEST_CASE("out-lower / in-upper greedy") {
    SUBCASE("single arc with a lower bound on its tail") {
        Digraph d = make(2, {{1, 0}});
        SolveResult r = solve_out_lower_in_upper(d, {neg_inf, 1}, uni(2, pos_inf));
        REQUIRE(is_feasible(r));
        CHECK(feasible(r).order == VertexOrder{0, 1});
    }
    SUBCASE("rho upper bound forces the arc to go right") {
        // with 0 placed first the arc 0->1 comes from an earlier vertex and
        // rho_right(1) stays 0; the reverse order puts it at 1
        Digraph d = make(2, {{0, 1}});
        SolveResult r = solve_out_lower_in_upper(d, uni(2, neg_inf), {pos_inf, 0.0});
        REQUIRE(is_feasible(r));
        CHECK(feasible(r).order == VertexOrder{0, 1});
        DegreeProfile bad = degree_profile(d, {1, 0});
        CHECK(bad.rho_right[1] == 1);
    }
    SUBCASE("single vertex is trivial") {
        CHECK(is_feasible(solve_out_lower_in_upper(make(1, {}), uni(1, neg_inf), uni(1, 0))));
    }
}

TEST_CASE("both greedies agree with brute force on small random instances") {
    std::mt19937_64 rng(501);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 8));
        std::vector<double> up = random_bounds(rng, n, pos_inf);
        std::vector<double> lo = random_bounds(rng, n, neg_inf);

        SolveResult a = solve_out_upper_in_lower(d, up, lo);
        auto oa = first_order_where(
            d, [&](const VertexOrder& o) { return meets_out_upper_in_lower(d, o, up, lo); });
        CHECK(is_feasible(a) == oa.has_value());
        if (is_feasible(a)) CHECK(meets_out_upper_in_lower(d, feasible(a).order, up, lo));

        SolveResult b = solve_out_lower_in_upper(d, lo, up);
        auto ob = first_order_where(
            d, [&](const VertexOrder& o) { return meets_out_lower_in_upper(d, o, lo, up); });
        CHECK(is_feasible(b) == ob.has_value());
        if (is_feasible(b)) CHECK(meets_out_lower_in_upper(d, feasible(b).order, lo, up));
    }
}

TEST_CASE("reversal duality between the two greedies") {
    std::mt19937_64 rng(733);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 8));
        std::vector<double> up = random_bounds(rng, n, pos_inf);
        std::vector<double> lo = random_bounds(rng, n, neg_inf);
        // reversing arcs and orders swaps delta_left with rho_right
        bool fwd = is_feasible(solve_out_upper_in_lower(d, up, lo));
        bool rev = is_feasible(solve_out_lower_in_upper(d.reversed(), lo, up));
        CHECK(fwd == rev);
    }
}

TEST_CASE("solve_exact") {
    SUBCASE("forced Hamiltonian chain") {
        Digraph d = make(3, {{2, 1}, {1, 0}});
        SolveResult r = solve_exact(d, {0, 1, 1}, {1, 1, 0});
        REQUIRE(is_feasible(r));
        CHECK(feasible(r).order == VertexOrder{0, 1, 2});
        CHECK(classify_arc_set(d, {0, 1}, ArcFamilyKind::HamiltonianDipath));
    }
    SUBCASE("sum mismatch is its own witness") {
        Digraph d = make(3, {{0, 1}, {1, 2}, {2, 0}});
        SolveResult r = solve_exact(d, {1, 1, 1}, {2, 0, 0});
        REQUIRE_FALSE(is_feasible(r));
        const Witness& w = *infeasible(r).witness;
        CHECK(w.kind == WitnessKind::SumMismatch);
        CHECK(w.lhs == 3);
        CHECK(w.rhs == 2);
    }
    SUBCASE("parallel arcs move together") {
        SolveResult r = solve_exact(two_parallel(), {1, 0}, {0, 1});
        CHECK_FALSE(is_feasible(r));
    }
    SUBCASE("matches brute force and satisfies the equalities exactly") {
        std::mt19937_64 rng(911);
        for (int iter = 0; iter < 400; ++iter) {
            int n = 1 + static_cast<int>(rng() % 4);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 8));
            std::vector<int> md(static_cast<size_t>(n)), mr(static_cast<size_t>(n));
            for (auto& x : md) x = static_cast<int>(rng() % 3);
            for (auto& x : mr) x = static_cast<int>(rng() % 3);
            SolveResult r = solve_exact(d, md, mr);
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                DegreeProfile p = degree_profile(d, o);
                for (int v = 0; v < n; ++v) {
                    size_t i = static_cast<size_t>(v);
                    if (p.delta_left[i] != md[i] || p.rho_right[i] != mr[i]) return false;
                }
                return true;
            });
            CHECK(is_feasible(r) == oracle.has_value());
            if (is_feasible(r)) {
                const DegreeProfile& p = feasible(r).profile;
                for (int v = 0; v < n; ++v) {
                    size_t i = static_cast<size_t>(v);
                    CHECK(p.delta_left[i] == md[i]);
                    CHECK(p.rho_right[i] == mr[i]);
                }
            }
        }
    }
}
