#include <doctest.h>

#include <random>

#include "ordo/family.hpp"
#include "ordo/oracle.hpp"
#include "support.hpp"

using namespace ordo;
using namespace ordo::test;

namespace {

FamilyGoal st_goal(std::vector<Vertex> s, std::vector<Vertex> t) {
    FamilyGoal g;
    g.kind = ArcFamilyKind::DisjointDipaths;
    g.sources = std::move(s);
    g.sinks = std::move(t);
    return g;
}

}  // namespace

TEST_CASE("partition_from_order") {
    ArcPartition p = partition_from_order(triangle(), {0, 1, 2}, ArcFamilyKind::InBranching);
    CHECK(p.family_arcs == std::vector<ArcId>{2});  // only 2->0 goes left
    CHECK(p.acyclic_arcs == std::vector<ArcId>{0, 1});

    Digraph chain = make(3, {{0, 1}, {1, 2}});
    ArcPartition pm = partition_from_order(chain, {0, 1, 2}, ArcFamilyKind::Matching);
    CHECK(pm.family_arcs.empty());
    CHECK(pm.acyclic_arcs.size() == 2);

    ArcPartition pt = partition_from_order(triangle(), {0, 1, 2}, ArcFamilyKind::Matching);
    CHECK(pt.family_arcs == std::vector<ArcId>{2});

    // two left-going arcs out of one vertex cannot be an in-branching
    Digraph fan = make(3, {{2, 0}, {2, 1}});
    CHECK_THROWS_AS(partition_from_order(fan, {0, 1, 2}, ArcFamilyKind::InBranching),
                    FamilyViolation);
}

TEST_CASE("order_in_branching") {
    SUBCASE("two parallel arcs are fine without forced roots") {
        FamilyOrderResult r = order_in_branching(two_parallel(), {});
        REQUIRE(is_feasible(r.result));
        CHECK(feasible(r.result).order == VertexOrder{0, 1});
        CHECK(r.partition->family_arcs.empty());
        CHECK(r.partition->acyclic_arcs.size() == 2);
    }
    SUBCASE("triangle splits into an in-branching plus an acyclic rest") {
        FamilyOrderResult r = order_in_branching(triangle(), {});
        REQUIRE(is_feasible(r.result));
        CHECK(classify_arc_set(triangle(), r.partition->family_arcs, ArcFamilyKind::InBranching));
        CHECK(classify_arc_set(triangle(), r.partition->acyclic_arcs, ArcFamilyKind::Acyclic));
        CHECK(r.partition->family_arcs.size() + r.partition->acyclic_arcs.size() == 3);
        CHECK(!r.partition->family_arcs.empty());  // a cycle forces a left arc
    }
    SUBCASE("2-cycle with both endpoints forced roots") {
        Digraph d = make(2, {{0, 1}, {1, 0}});
        FamilyOrderResult r = order_in_branching(d, {0, 1});
        REQUIRE_FALSE(is_feasible(r.result));
        const Witness& w = *infeasible(r.result).witness;
        CHECK(w.kind == WitnessKind::InducedSet);
        CHECK(w.vertices == std::vector<Vertex>{0, 1});
    }
    SUBCASE("feasibility matches the permutation oracle on random instances") {
        std::mt19937_64 rng(17);
        for (int iter = 0; iter < 200; ++iter) {
            int n = 1 + static_cast<int>(rng() % 5);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 10));
            FamilyOrderResult r = order_in_branching(d, {});
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                return classify_arc_set(d, left_arcs(d, o), ArcFamilyKind::InBranching);
            });
            CHECK(is_feasible(r.result) == oracle.has_value());
            if (r.partition) {
                CHECK(classify_arc_set(d, r.partition->family_arcs, ArcFamilyKind::InBranching));
                CHECK(classify_arc_set(d, r.partition->acyclic_arcs, ArcFamilyKind::Acyclic));
            }
        }
    }
}

TEST_CASE("k disjoint S-T dipath orders") {
    SUBCASE("single arc instance") {
        Digraph d = make(2, {{0, 1}});
        FamilyOrderResult r = order_k_disjoint_st_dipaths(d, {{0}, {1}});
        REQUIRE(is_feasible(r.result));
        CHECK(feasible(r.result).order == VertexOrder{1, 0});
    }
    SUBCASE("no dipath at all yields an empty cut") {
        Digraph d = make(2, {});
        FamilyOrderResult r = order_k_disjoint_st_dipaths(d, {{0}, {1}});
        REQUIRE_FALSE(is_feasible(r.result));
        const Witness& w = *infeasible(r.result).witness;
        CHECK(w.kind == WitnessKind::CutSet);
        CHECK(w.vertices.empty());
        CHECK(w.k == 1);
        CHECK(check_cut_set(d, w.vertices, w.k, {0}, {1}));
    }
    SUBCASE("two source-sink pairs joined directly") {
        Digraph d = make(4, {{0, 2}, {1, 3}});
        FamilyOrderResult r = order_k_disjoint_st_dipaths(d, {{0, 1}, {2, 3}});
        REQUIRE(is_feasible(r.result));
        CHECK(satisfies_family(d, left_arcs(d, feasible(r.result).order), st_goal({0, 1}, {2, 3})));
    }
    SUBCASE("input validation") {
        Digraph d = make(3, {});
        CHECK_THROWS_AS(order_k_disjoint_st_dipaths(d, {{0}, {0}}), SpecError);
        CHECK_THROWS_AS(order_k_disjoint_st_dipaths(d, {{0, 1}, {2}}), SpecError);
        CHECK_THROWS_AS(order_k_disjoint_st_dipaths(d, {{0, 0}, {1, 2}}), SpecError);
    }
    SUBCASE("random instances match the oracle and witnesses check out") {
        std::mt19937_64 rng(271);
        for (int iter = 0; iter < 300; ++iter) {
            int n = 2 + static_cast<int>(rng() % 4);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 10));
            int k = 1 + static_cast<int>(rng() % 2);
            if (2 * k > n) k = 1;
            std::vector<Vertex> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Vertex> S(perm.begin(), perm.begin() + k);
            std::vector<Vertex> T(perm.begin() + k, perm.begin() + 2 * k);

            FamilyOrderResult r = order_k_disjoint_st_dipaths(d, {S, T});
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                return satisfies_family(d, left_arcs(d, o), st_goal(S, T));
            });
            CHECK(is_feasible(r.result) == oracle.has_value());
            if (!is_feasible(r.result)) {
                const Witness& w = *infeasible(r.result).witness;
                if (w.kind == WitnessKind::CutSet) {
                    CHECK(static_cast<int>(w.vertices.size()) < w.k);
                    CHECK(check_cut_set(d, w.vertices, w.k, S, T));
                } else {
                    CHECK(w.kind == WitnessKind::StuckSet);
                    CHECK(w.validated);
                    CHECK(check_st_stuck_set(d, w.vertices, S, T));
                }
            }
        }
    }
}

TEST_CASE("Hamiltonian dipath orders") {
    SUBCASE("reverse chain") {
        Digraph d = make(3, {{2, 1}, {1, 0}});
        FamilyOrderResult r = order_hamiltonian_dipath(d, std::nullopt);
        REQUIRE(is_feasible(r.result));
        CHECK(feasible(r.result).order == VertexOrder{0, 1, 2});
    }
    SUBCASE("two parallel arcs: partition exists but no order does") {
        FamilyOrderResult r = order_hamiltonian_dipath(two_parallel(), std::nullopt);
        CHECK_FALSE(is_feasible(r.result));
        PartitionResult p = oracle_partition(two_parallel(), ArcFamilyKind::HamiltonianDipath);
        CHECK(p.feasible);
    }
    SUBCASE("plain triangle: order (1,0,2) puts 2->0->1 on the left") {
        FamilyOrderResult r = order_hamiltonian_dipath(triangle(), std::nullopt);
        REQUIRE(is_feasible(r.result));
        CHECK(classify_arc_set(triangle(), left_arcs(triangle(), feasible(r.result).order),
                               ArcFamilyKind::HamiltonianDipath));
    }
    SUBCASE("agrees with the permutation oracle for n <= 5") {
        std::mt19937_64 rng(357);
        for (int iter = 0; iter < 250; ++iter) {
            int n = 1 + static_cast<int>(rng() % 5);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 12));
            FamilyOrderResult r = order_hamiltonian_dipath(d, std::nullopt);
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                return classify_arc_set(d, left_arcs(d, o), ArcFamilyKind::HamiltonianDipath);
            });
            CHECK(is_feasible(r.result) == oracle.has_value());
        }
    }
    SUBCASE("fixed endpoints") {
        Digraph d = make(3, {{2, 1}, {1, 0}});
        CHECK(is_feasible(order_hamiltonian_dipath(d, {{2, 0}}).result));
        CHECK_FALSE(is_feasible(order_hamiltonian_dipath(d, {{0, 2}}).result));
        CHECK_THROWS_AS(order_hamiltonian_dipath(d, {{1, 1}}), SpecError);
    }
}

TEST_CASE("disjoint dipaths with free endpoints") {
    SUBCASE("triangle has a single left arc forming one dipath") {
        FamilyOrderResult r = order_disjoint_dipaths_free_endpoints(triangle(), 1);
        REQUIRE(is_feasible(r.result));
        CHECK(r.partition->family_arcs.size() >= 1);
    }
    SUBCASE("2-cycle plus isolated vertex") {
        Digraph d = make(3, {{0, 1}, {1, 0}});
        CHECK(is_feasible(order_disjoint_dipaths_free_endpoints(d, 1).result));
    }
    SUBCASE("validation and caps") {
        CHECK_THROWS_AS(order_disjoint_dipaths_free_endpoints(triangle(), 0), SpecError);
        CHECK_THROWS_AS(order_disjoint_dipaths_free_endpoints(triangle(), 2), SpecError);
        Digraph d = make(6, {});
        CHECK_THROWS_AS(order_disjoint_dipaths_free_endpoints(d, 3), CapExceeded);
    }
    SUBCASE("agrees with an oracle that counts non-empty dipaths") {
        std::mt19937_64 rng(577);
        for (int iter = 0; iter < 150; ++iter) {
            int n = 2 + static_cast<int>(rng() % 4);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 8));
            int k = 1 + static_cast<int>(rng() % 2);
            if (2 * k > n) k = 1;
            FamilyOrderResult r = order_disjoint_dipaths_free_endpoints(d, k);
            FamilyGoal goal;
            goal.kind = ArcFamilyKind::DisjointDipaths;
            goal.count = k;
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                return satisfies_family(d, left_arcs(d, o), goal);
            });
            CHECK(is_feasible(r.result) == oracle.has_value());
        }
    }
}

TEST_CASE("in-arborescence / out-arborescence split orders") {
    SUBCASE("2-cycle around the root") {
        Digraph d = make(2, {{0, 1}, {1, 0}});
        FamilyOrderResult r = order_in_arb_out_arb(d, 0);
        REQUIRE(is_feasible(r.result));
        CHECK(feasible(r.result).order == VertexOrder{0, 1});
        CHECK(r.partition->family_arcs == std::vector<ArcId>{1});  // 1->0 goes left
    }
    SUBCASE("one-way chain lacks the return arc") {
        Digraph d = make(2, {{0, 1}});
        CHECK_FALSE(is_feasible(order_in_arb_out_arb(d, 0).result));
    }
    SUBCASE("complete symmetric triangle is infeasible for every root") {
        // the last vertex of any order sends both out-arcs left, so the left
        // set is never an in-branching
        Digraph k3 = make(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
        for (Vertex r = 0; r < 3; ++r) CHECK_FALSE(is_feasible(order_in_arb_out_arb(k3, r).result));
        CHECK_FALSE(is_feasible(order_in_arb_out_arb(k3, std::nullopt).result));
    }
    SUBCASE("three-vertex split instance") {
        Digraph d = make(3, {{1, 0}, {2, 1}, {0, 1}, {1, 2}});
        FamilyOrderResult r = order_in_arb_out_arb(d, 0);
        REQUIRE(is_feasible(r.result));
        CHECK(feasible(r.result).order == VertexOrder{0, 1, 2});
    }
    SUBCASE("agrees with the permutation oracle") {
        std::mt19937_64 rng(881);
        for (int iter = 0; iter < 200; ++iter) {
            int n = 1 + static_cast<int>(rng() % 4);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 10));
            FamilyOrderResult r = order_in_arb_out_arb(d, std::nullopt);
            auto oracle = first_order_where(d, [&](const VertexOrder& o) {
                std::vector<ArcId> left = left_arcs(d, o);
                if (!classify_arc_set(d, left, ArcFamilyKind::InArborescence)) return false;
                std::vector<bool> is_left(static_cast<size_t>(d.arc_count()), false);
                for (ArcId a : left) is_left[static_cast<size_t>(a)] = true;
                std::vector<ArcId> right;
                for (ArcId a = 0; a < d.arc_count(); ++a)
                    if (!is_left[static_cast<size_t>(a)]) right.push_back(a);
                return classify_arc_set(d.reversed(), right, ArcFamilyKind::InArborescence);
            });
            CHECK(is_feasible(r.result) == oracle.has_value());
        }
    }
}

TEST_CASE("minimal feedback arc set helpers") {
    // the triangle's single left arc is a minimal FAS
    CHECK(is_minimal_feedback_arc_set(triangle(), {2}));
    CHECK_FALSE(is_minimal_feedback_arc_set(triangle(), {}));
    CHECK_FALSE(is_minimal_feedback_arc_set(triangle(), {1, 2}));

    auto order = order_from_feedback_arcs(triangle(), {2});
    REQUIRE(order.has_value());
    CHECK(left_arcs(triangle(), *order) == std::vector<ArcId>{2});
    // reversing a non-minimal feedback arc set can still be acyclic, in
    // which case exactly those arcs go left in the topological order
    auto wide = order_from_feedback_arcs(triangle(), {1, 2});
    REQUIRE(wide.has_value());
    CHECK(left_arcs(triangle(), *wide) == std::vector<ArcId>{1, 2});
    // flipping every arc of the cycle is cyclic again
    CHECK_FALSE(order_from_feedback_arcs(triangle(), {0, 1, 2}).has_value());
}
