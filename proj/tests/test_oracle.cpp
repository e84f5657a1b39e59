#include <doctest.h>

#include <random>

#include "ordo/oracle.hpp"
#include "support.hpp"

using namespace ordo;
using namespace ordo::test;

namespace {

std::vector<double> uni(int n, double v) { return std::vector<double>(static_cast<size_t>(n), v); }

OrderPredicate random_predicate(std::mt19937_64& rng, const Digraph& d) {
    const int n = d.vertex_count();
    switch (rng() % 5) {
        case 0: {
            BoundSpec b = BoundSpec::none(n);
            for (int v = 0; v < n; ++v) {
                if (rng() % 2) b.g[static_cast<size_t>(v)] = static_cast<double>(rng() % 3);
                if (rng() % 3 == 0) b.f[static_cast<size_t>(v)] = static_cast<double>(rng() % 3);
            }
            return BoundsPredicate{b, WeightMode::Arc};
        }
        case 1: {
            FamilyGoal goal;
            static const ArcFamilyKind kinds[] = {
                ArcFamilyKind::InBranching,     ArcFamilyKind::Matching,
                ArcFamilyKind::DisjointDipaths, ArcFamilyKind::HamiltonianDipath,
                ArcFamilyKind::PerfectMatching, ArcFamilyKind::InArborescence,
                ArcFamilyKind::Dipath};
            goal.kind = kinds[rng() % 7];
            return FamilyPredicate{goal};
        }
        case 2: {
            std::vector<double> g(static_cast<size_t>(n));
            for (auto& x : g) x = static_cast<double>(rng() % 2);
            return DDistancePredicate{1 + static_cast<int>(rng() % n), g, WeightMode::Arc};
        }
        case 3: {
            std::vector<int> md(static_cast<size_t>(n)), mr(static_cast<size_t>(n));
            for (auto& x : md) x = static_cast<int>(rng() % 3);
            for (auto& x : mr) x = static_cast<int>(rng() % 3);
            return ExactPredicate{md, mr};
        }
        default: {
            SimultaneousPredicate p;
            p.g_delta = uni(n, static_cast<double>(rng() % 3));
            p.f_rho = uni(n, static_cast<double>(rng() % 2));
            return p;
        }
    }
}

}  // namespace

TEST_CASE("oracle_order basics") {
    BoundSpec g0 = BoundSpec::upper_only(uni(3, 0));
    CHECK_FALSE(is_feasible(oracle_order(triangle(), BoundsPredicate{g0, WeightMode::Arc})));
    CHECK_FALSE(oracle_order(triangle(), BoundsPredicate{g0, WeightMode::Arc})
                    .index() == 0);

    BoundSpec g1 = BoundSpec::upper_only(uni(3, 1));
    SolveResult r = oracle_order(triangle(), BoundsPredicate{g1, WeightMode::Arc});
    REQUIRE(is_feasible(r));
    CHECK(feasible(r).order == VertexOrder{0, 1, 2});  // lexicographically first

    Digraph chain = make(3, {{2, 1}, {1, 0}});
    FamilyGoal ham;
    ham.kind = ArcFamilyKind::HamiltonianDipath;
    CHECK(is_feasible(oracle_order(chain, FamilyPredicate{ham})));

    Digraph big(9, {});
    CHECK_THROWS_AS(oracle_order(big, BoundsPredicate{BoundSpec::none(9), WeightMode::Arc}),
                    CapExceeded);
    OracleConfig wide;
    wide.order_cap = 9;
    CHECK_NOTHROW(oracle_order(big, BoundsPredicate{BoundSpec::none(9), WeightMode::Arc}, wide));
}

TEST_CASE("pruned search equals plain enumeration on random predicates") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 500; ++iter) {
        int n = 1 + static_cast<int>(rng() % 5);
        Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 10));
        OrderPredicate pred = random_predicate(rng, d);
        SolveResult fast = oracle_order(d, pred);
        auto naive =
            first_order_where(d, [&](const VertexOrder& o) { return evaluate_order(d, pred, o); });
        REQUIRE(is_feasible(fast) == naive.has_value());
        if (naive) CHECK(feasible(fast).order == *naive);  // same lexicographic winner
    }
}

TEST_CASE("oracle_partition") {
    SUBCASE("two parallel arcs split into a perfect matching and one arc") {
        PartitionResult r = oracle_partition(two_parallel(), ArcFamilyKind::PerfectMatching);
        REQUIRE(r.feasible);
        CHECK(r.partition.family_arcs.size() == 1);
        CHECK(r.partition.acyclic_arcs.size() == 1);
    }
    SUBCASE("2-cycle is covered by a single matching arc") {
        Digraph d = make(2, {{0, 1}, {1, 0}});
        PartitionResult r = oracle_partition(d, ArcFamilyKind::Matching);
        REQUIRE(r.feasible);
        CHECK(r.partition.family_arcs.size() == 1);
    }
    SUBCASE("matches subset brute force on random instances") {
        std::mt19937_64 rng(99);
        for (int iter = 0; iter < 200; ++iter) {
            int n = 1 + static_cast<int>(rng() % 4);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 7));
            static const ArcFamilyKind kinds[] = {
                ArcFamilyKind::InBranching, ArcFamilyKind::Matching,
                ArcFamilyKind::DisjointDipaths, ArcFamilyKind::PerfectMatching,
                ArcFamilyKind::HamiltonianDipath, ArcFamilyKind::InArborescence,
                ArcFamilyKind::Dipath, ArcFamilyKind::Acyclic};
            ArcFamilyKind kind = kinds[rng() % 8];
            PartitionResult r = oracle_partition(d, kind);
            // reference: plain enumeration of every arc subset
            bool expect = false;
            for (uint64_t mask = 0; mask < (1ull << d.arc_count()) && !expect; ++mask) {
                std::vector<ArcId> fam, rest;
                for (ArcId a = 0; a < d.arc_count(); ++a)
                    (mask >> a & 1 ? fam : rest).push_back(a);
                expect = classify_arc_set(d, fam, kind) &&
                         classify_arc_set(d, rest, ArcFamilyKind::Acyclic);
            }
            REQUIRE(r.feasible == expect);
            if (r.feasible) {
                CHECK(classify_arc_set(d, r.partition.family_arcs, kind));
                CHECK(classify_arc_set(d, r.partition.acyclic_arcs, ArcFamilyKind::Acyclic));
                CHECK(r.partition.family_arcs.size() + r.partition.acyclic_arcs.size() ==
                      static_cast<size_t>(d.arc_count()));
            }
        }
    }
}

TEST_CASE("decreasingly minimal orders") {
    SUBCASE("acyclic digraphs have an all-zero vector") {
        Digraph chain = make(4, {{0, 1}, {1, 2}, {2, 3}});
        DecreasingMinResult r = oracle_decreasing_min(chain, uni(4, 1));
        REQUIRE(r.feasible);
        CHECK(r.sorted_degrees == std::vector<int>{0, 0, 0, 0});
    }
    SUBCASE("triangle forces exactly one left arc") {
        DecreasingMinResult r = oracle_decreasing_min(triangle(), uni(3, 1));
        REQUIRE(r.feasible);
        CHECK(r.sorted_degrees == std::vector<int>{1, 0, 0});
    }
    SUBCASE("two disjoint triangles force two") {
        Digraph d = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        DecreasingMinResult r = oracle_decreasing_min(d, uni(6, 1), OracleConfig{8, 22});
        REQUIRE(r.feasible);
        CHECK(r.sorted_degrees == std::vector<int>{1, 1, 0, 0, 0, 0});
    }
    SUBCASE("infeasible bounds are reported") {
        CHECK_FALSE(oracle_decreasing_min(triangle(), uni(3, 0)).feasible);
    }
}

TEST_CASE("minimum in-branching cycle cover") {
    SUBCASE("acyclic input needs nothing") {
        Digraph chain = make(3, {{0, 1}, {1, 2}});
        InBranchingCoverResult r = oracle_min_inbranching_cover(chain);
        REQUIRE(r.feasible);
        CHECK(r.size == 0);
    }
    SUBCASE("triangle needs one arc") {
        InBranchingCoverResult r = oracle_min_inbranching_cover(triangle());
        REQUIRE(r.feasible);
        CHECK(r.size == 1);
    }
    SUBCASE("two disjoint triangles need two") {
        Digraph d = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        CHECK(oracle_min_inbranching_cover(d).size == 2);
    }
    SUBCASE("three mutual 2-cycles cannot be covered by an in-branching") {
        Digraph d = make(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
        CHECK_FALSE(oracle_min_inbranching_cover(d).feasible);
    }
    SUBCASE("cover size equals the number of nonzero entries of the dec-min vector") {
        std::mt19937_64 rng(311);
        for (int iter = 0; iter < 200; ++iter) {
            int n = 1 + static_cast<int>(rng() % 5);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 8));
            DecreasingMinResult dm = oracle_decreasing_min(d, uni(n, 1));
            InBranchingCoverResult cover = oracle_min_inbranching_cover(d);
            REQUIRE(dm.feasible == cover.feasible);
            if (dm.feasible) {
                int nonzero = 0;
                for (int x : dm.sorted_degrees)
                    if (x > 0) ++nonzero;
                CHECK(nonzero == cover.size);
            }
        }
    }
}

TEST_CASE("lexicographic order oracles") {
    SUBCASE("symmetric path A-B-C") {
        // vertices 0-1-2 with symmetric arcs along the path
        Digraph d = make(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
        LexResult r = oracle_lex(d, {LexObjective::Side::FromLeft, LexObjective::Sense::Min});
        CHECK(r.degrees == std::vector<int>{0, 0, 2});
        CHECK(r.order == VertexOrder{0, 2, 1});
    }
    SUBCASE("empty digraph") {
        LexResult r = oracle_lex(make(3, {}), {LexObjective::Side::FromLeft,
                                               LexObjective::Sense::Max});
        CHECK(r.degrees == std::vector<int>{0, 0, 0});
    }
    SUBCASE("complement duality: optimal order sets coincide") {
        std::mt19937_64 rng(2024);
        for (int iter = 0; iter < 120; ++iter) {
            int n = 2 + static_cast<int>(rng() % 3);
            Digraph d = simple_digraph_from_mask(n, rng() % simple_digraph_count(n));
            // complement digraph: arc wherever d has none
            std::vector<Arc> comp;
            std::vector<std::vector<bool>> has(static_cast<size_t>(n),
                                               std::vector<bool>(static_cast<size_t>(n), false));
            for (const Arc& a : d.arcs())
                has[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = true;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u != v && !has[static_cast<size_t>(u)][static_cast<size_t>(v)])
                        comp.push_back({u, v, 1.0});
            Digraph dbar(n, std::move(comp));

            for (auto side : {LexObjective::Side::FromLeft, LexObjective::Side::FromRight}) {
                LexResult mn = oracle_lex(d, {side, LexObjective::Sense::Min});
                LexResult mx = oracle_lex(dbar, {side, LexObjective::Sense::Max});
                auto key = [&](const Digraph& dg, const VertexOrder& o) {
                    DegreeProfile p = degree_profile(dg, o);
                    std::vector<int> v(o.size());
                    for (size_t i = 0; i < o.size(); ++i)
                        v[i] = p.delta_left[static_cast<size_t>(o[i])];
                    if (side == LexObjective::Side::FromRight)
                        std::reverse(v.begin(), v.end());
                    return v;
                };
                std::vector<int> mn_key = key(d, mn.order);
                std::vector<int> mx_key = key(dbar, mx.order);
                // every order is min-optimal for D exactly when it is
                // max-optimal for the complement
                first_order_where(d, [&](const VertexOrder& o) {
                    CHECK((key(d, o) == mn_key) == (key(dbar, o) == mx_key));
                    return false;
                });
            }
        }
    }
    SUBCASE("from-right minimal suffix length equals the min-degree clique number") {
        std::mt19937_64 rng(909);
        for (int iter = 0; iter < 150; ++iter) {
            int n = 2 + static_cast<int>(rng() % 4);
            // random undirected graph as a symmetric digraph
            std::vector<Arc> arcs;
            std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                               std::vector<bool>(static_cast<size_t>(n), false));
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng() % 2) {
                        arcs.push_back({u, v, 1.0});
                        arcs.push_back({v, u, 1.0});
                        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
                        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
                    }
            Digraph d(n, std::move(arcs));

            LexResult r = oracle_lex(d, {LexObjective::Side::FromRight, LexObjective::Sense::Min});
            int suffix = 1;
            for (size_t i = r.degrees.size() - 1; i > 0; --i) {
                if (r.degrees[i - 1] < r.degrees[i])
                    ++suffix;
                else
                    break;
            }
            // independent brute force: max clique among minimum-degree vertices
            int dmin = n;
            for (Vertex v = 0; v < n; ++v) dmin = std::min(dmin, d.out_degree(v));
            std::vector<Vertex> mins;
            for (Vertex v = 0; v < n; ++v)
                if (d.out_degree(v) == dmin) mins.push_back(v);
            int best_clique = 0;
            for (uint64_t mask = 1; mask < (1ull << mins.size()); ++mask) {
                std::vector<Vertex> cand;
                for (size_t i = 0; i < mins.size(); ++i)
                    if (mask >> i & 1) cand.push_back(mins[i]);
                bool clique = true;
                for (size_t a = 0; a < cand.size() && clique; ++a)
                    for (size_t b = a + 1; b < cand.size() && clique; ++b)
                        clique = adj[static_cast<size_t>(cand[a])][static_cast<size_t>(cand[b])];
                if (clique) best_clique = std::max(best_clique, static_cast<int>(cand.size()));
            }
            CHECK(suffix == best_clique);
        }
    }
}
