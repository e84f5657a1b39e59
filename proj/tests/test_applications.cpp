#include <doctest.h>

#include <random>
#include <set>

#include "ordo/applications.hpp"
#include "ordo/digraph.hpp"
#include "support.hpp"

using namespace ordo;
using namespace ordo::test;

namespace {

RankingProfile profile_of(int c, std::vector<std::vector<int>> rankings) {
    RankingProfile p;
    p.num_candidates = c;
    p.rankings = std::move(rankings);
    for (int i = 0; i < c; ++i) p.candidate_names.push_back(std::string(1, char('A' + i)));
    return p;
}

}  // namespace

TEST_CASE("penalty digraph") {
    SUBCASE("unanimous majority gives a single arc") {
        Digraph d = build_penalty_digraph(profile_of(2, {{0, 1}, {0, 1}, {0, 1}}));
        REQUIRE(d.arc_count() == 1);
        CHECK(d.arc(0).tail == 0);
        CHECK(d.arc(0).head == 1);
    }
    SUBCASE("a 1-1 split is a tie and produces no arc") {
        CHECK(build_penalty_digraph(profile_of(2, {{0, 1}, {1, 0}})).arc_count() == 0);
    }
    SUBCASE("three judges, pairwise majorities tallied by hand") {
        // judges: (A,B,C), (A,B,C), (C,A,B) -> arcs A->B, A->C, B->C
        Digraph d = build_penalty_digraph(profile_of(3, {{0, 1, 2}, {0, 1, 2}, {2, 0, 1}}));
        CHECK(d.arc_count() == 3);
        std::set<std::pair<int, int>> arcs;
        for (const Arc& a : d.arcs()) arcs.emplace(a.tail, a.head);
        CHECK(arcs == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("never contains both directions") {
        std::mt19937_64 rng(404);
        for (int iter = 0; iter < 100; ++iter) {
            int c = 2 + static_cast<int>(rng() % 4);
            int judges = 1 + static_cast<int>(rng() % 5);
            std::vector<std::vector<int>> rankings;
            for (int j = 0; j < judges; ++j) {
                std::vector<int> r(static_cast<size_t>(c));
                std::iota(r.begin(), r.end(), 0);
                std::shuffle(r.begin(), r.end(), rng);
                rankings.push_back(std::move(r));
            }
            Digraph d = build_penalty_digraph(profile_of(c, std::move(rankings)));
            std::set<std::pair<int, int>> arcs;
            for (const Arc& a : d.arcs()) {
                CHECK_FALSE(arcs.count({a.head, a.tail}));
                arcs.emplace(a.tail, a.head);
            }
        }
    }
}

TEST_CASE("minmax unfairness") {
    SUBCASE("unanimous profile is perfectly fair") {
        UnfairnessResult r = minmax_unfairness_order(profile_of(3, {{2, 0, 1}, {2, 0, 1}}));
        CHECK(r.max_phi == 0);
    }
    SUBCASE("Condorcet cycle forces unfairness 1") {
        // A>B, B>C, C>A majority cycle
        UnfairnessResult r =
            minmax_unfairness_order(profile_of(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
        CHECK(r.max_phi == 1);
    }
    SUBCASE("two-candidate tie") {
        CHECK(minmax_unfairness_order(profile_of(2, {{0, 1}, {1, 0}})).max_phi == 0);
    }
    SUBCASE("equals brute force over candidate orders") {
        std::mt19937_64 rng(808);
        for (int iter = 0; iter < 120; ++iter) {
            int c = 2 + static_cast<int>(rng() % 4);
            int judges = 1 + static_cast<int>(rng() % 5);
            std::vector<std::vector<int>> rankings;
            for (int j = 0; j < judges; ++j) {
                std::vector<int> r(static_cast<size_t>(c));
                std::iota(r.begin(), r.end(), 0);
                std::shuffle(r.begin(), r.end(), rng);
                rankings.push_back(std::move(r));
            }
            RankingProfile profile = profile_of(c, std::move(rankings));
            UnfairnessResult got = minmax_unfairness_order(profile);
            Digraph penalty = build_penalty_digraph(profile);
            int best = c;
            first_order_where(penalty, [&](const VertexOrder& o) {
                DegreeProfile p = degree_profile(penalty, o);
                int mx = 0;
                for (int x : p.delta_left) mx = std::max(mx, x);
                best = std::min(best, mx);
                return false;
            });
            CHECK(got.max_phi == best);
        }
    }
}

TEST_CASE("bounded disappointment") {
    SUBCASE("single judge with zero caps reproduces the judge's ranking") {
        RankingProfile p = profile_of(3, {{2, 1, 0}});
        SolveResult r = bounded_disappointment_order(p, {0, 0, 0});
        REQUIRE(is_feasible(r));
        CHECK(feasible(r).order == VertexOrder{2, 1, 0});
    }
    SUBCASE("2-1 split with cap 1 admits only the majority order") {
        // two judges rank A before B, one the other way: w_A(B) = 2, w_B(A) = 1
        RankingProfile p = profile_of(2, {{0, 1}, {0, 1}, {1, 0}});
        SolveResult r = bounded_disappointment_order(p, {1, 1});
        REQUIRE(is_feasible(r));
        CHECK(feasible(r).order == VertexOrder{0, 1});
        DegreeProfile bad = degree_profile(build_disappointment_digraph(p), {1, 0});
        CHECK(bad.delta_left_w[0] == 2);  // A's disappointment when B leads
    }
    SUBCASE("infinite caps always work") {
        RankingProfile p = profile_of(3, {{0, 1, 2}, {2, 1, 0}});
        CHECK(is_feasible(bounded_disappointment_order(
            p, std::vector<double>(3, pos_inf))));
    }
}

TEST_CASE("threshold activation") {
    SUBCASE("chain activates") {
        ThresholdNetwork net{make(2, {{0, 1}}), {0, 1}, {0}};
        ActivationResult r = check_activation(net);
        REQUIRE(r.fully_activates);
        CHECK(r.activation_order == VertexOrder{0, 1});
    }
    SUBCASE("threshold above the indegree blocks") {
        ThresholdNetwork net{make(2, {{0, 1}}), {0, 2}, {0}};
        ActivationResult r = check_activation(net);
        REQUIRE_FALSE(r.fully_activates);
        CHECK(r.blocked == std::vector<Vertex>{1});
    }
    SUBCASE("mutual dependency without a seed") {
        ThresholdNetwork net{make(2, {{0, 1}, {1, 0}}), {1, 1}, {}};
        ActivationResult r = check_activation(net);
        REQUIRE_FALSE(r.fully_activates);
        CHECK(r.blocked == std::vector<Vertex>{0, 1});
    }
    SUBCASE("matches round-based simulation on random networks") {
        std::mt19937_64 rng(616);
        for (int iter = 0; iter < 400; ++iter) {
            int n = 1 + static_cast<int>(rng() % 6);
            Digraph d = random_digraph(rng, n, static_cast<int>(rng() % 12));
            std::vector<double> tau(static_cast<size_t>(n));
            for (auto& t : tau) t = static_cast<double>(rng() % 3);
            std::vector<Vertex> seed;
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 3 == 0) seed.push_back(v);
            ThresholdNetwork net{std::move(d), std::move(tau), std::move(seed)};
            ActivationResult r = check_activation(net);
            CHECK(r.fully_activates == simulate_activation(net));
            if (r.fully_activates) {
                // the emitted order is a valid one-by-one activation sequence
                std::vector<bool> seeded =
                    make_membership(net.digraph.vertex_count(), net.seed);
                std::vector<bool> active(static_cast<size_t>(net.digraph.vertex_count()), false);
                for (Vertex v : r.activation_order) {
                    double support = 0;
                    for (ArcId a : net.digraph.in_arcs(v))
                        if (active[static_cast<size_t>(net.digraph.arc(a).tail)])
                            support += net.digraph.arc(a).weight;
                    if (!seeded[static_cast<size_t>(v)])
                        CHECK(support >= net.tau[static_cast<size_t>(v)]);
                    active[static_cast<size_t>(v)] = true;
                }
            }
        }
    }
}
