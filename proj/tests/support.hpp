#ifndef ORDO_TESTS_SUPPORT_HPP
#define ORDO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ordo/digraph.hpp"

namespace ordo::test {

inline Digraph make(int n, std::vector<Arc> arcs) { return Digraph(n, std::move(arcs)); }

inline Digraph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Digraph two_parallel() { return make(2, {{0, 1}, {0, 1}}); }

// All 2^(n(n-1)) loop-free digraphs on n vertices with at most one arc per
// ordered pair, indexed by bitmask over pairs in (tail, head) lexicographic
// order.
inline Digraph simple_digraph_from_mask(int n, uint64_t mask) {
    std::vector<Arc> arcs;
    int bit = 0;
    for (Vertex t = 0; t < n; ++t)
        for (Vertex h = 0; h < n; ++h) {
            if (t == h) continue;
            if (mask >> bit & 1) arcs.push_back({t, h, 1.0});
            ++bit;
        }
    return Digraph(n, std::move(arcs));
}

inline uint64_t simple_digraph_count(int n) { return 1ull << (n * (n - 1)); }

// Exhaustive permutation scan with std::next_permutation; the reference
// implementation the search-based oracle is tested against.
inline std::optional<VertexOrder> first_order_where(
    const Digraph& d, const std::function<bool(const VertexOrder&)>& pred) {
    VertexOrder order(static_cast<size_t>(d.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (pred(order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

// Seeded random multidigraph (parallel arcs allowed).
inline Digraph random_digraph(std::mt19937_64& rng, int n, int m) {
    std::vector<Arc> arcs;
    for (int i = 0; i < m && n >= 2; ++i) {
        Vertex t = static_cast<Vertex>(rng() % static_cast<uint64_t>(n));
        Vertex h = static_cast<Vertex>(rng() % static_cast<uint64_t>(n - 1));
        if (h >= t) ++h;
        arcs.push_back({t, h, 1.0});
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace ordo::test

#endif
