// peeling.hpp
// Sound upper bounds on how many colors a proper rainbow-k-cycle-free
// coloring of a graph can use.
//
// Picking one edge per color class of such a coloring yields a rainbow
// subgraph, which therefore contains no k-cycle; hence the number of colors
// is at most the size of a maximum k-cycle-free subgraph.  Small graphs get
// that value exactly (branch and bound from maxfree.hpp).  Larger graphs get
// the cheapest of two relaxations, both of which only ever overestimate:
//
//   * packing: t pairwise edge-disjoint k-cycles each give up at least one
//     edge, so the maximum is at most |E| - t;
//   * restriction: for any edge subset E', a k-cycle-free subgraph meets E'
//     in a k-cycle-free subgraph of (V, E'), so the maximum is at most
//     max over (V, E') plus the edges outside E'.  We peel the graph down to
//     its busiest edges (highest cycle participation) and solve that part
//     exactly.
//
// A greedy "remove edges until no k-cycle survives" pass is *not* used: it
// lands at or below the true maximum, and an undershooting cap could cut off
// valid colorings.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/maxfree.hpp"

namespace rainbow {

struct PaletteCeiling {
    int bound = 0;            // colors used by any valid coloring never exceed this
    bool exact = false;       // true when bound is the exact maximum subgraph size
    std::uint64_t nodes = 0;  // branch-and-bound nodes, when an exact search ran
};

inline PaletteCeiling palette_ceiling_by_peeling(const Graph& g, int k)
{
    const int m = g.edge_count();
    const auto cycles = enumerate_cycles(g, k);
    if (cycles.empty())
        return {m, true, 0};

    if (m <= 30) {
        const auto exact = max_cycle_free_subgraph(g, k);
        return {exact.best_count, true, exact.nodes};
    }

    // Packing bound: greedy edge-disjoint k-cycles in canonical order.
    std::vector<char> edge_used(static_cast<std::size_t>(m), 0);
    int packed = 0;
    for (const auto& cycle : cycles) {
        bool free_of_used = true;
        std::vector<int> indices;
        for (const Edge& e : cycle.edges()) {
            const int idx = g.edge_index(e.first, e.second);
            indices.push_back(idx);
            if (edge_used[static_cast<std::size_t>(idx)])
                free_of_used = false;
        }
        if (!free_of_used)
            continue;
        for (int idx : indices)
            edge_used[static_cast<std::size_t>(idx)] = 1;
        ++packed;
    }
    int bound = m - packed;

    // Restriction bound: exact search on the busiest edges, everything else
    // conceded.  26 edges keeps the inner search comfortably small.
    constexpr int kInnerLimit = 26;
    std::vector<int> participation(static_cast<std::size_t>(m), 0);
    for (const auto& cycle : cycles)
        for (const Edge& e : cycle.edges())
            ++participation[static_cast<std::size_t>(g.edge_index(e.first, e.second))];
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        order[static_cast<std::size_t>(e)] = e;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return participation[static_cast<std::size_t>(a)] >
               participation[static_cast<std::size_t>(b)];
    });
    std::vector<Edge> busiest;
    for (int i = 0; i < kInnerLimit; ++i)
        busiest.push_back(g.edges()[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    const auto inner = max_cycle_free_subgraph(Graph(g.vertex_count(), busiest), k);
    bound = std::min(bound, inner.best_count + (m - kInnerLimit));

    return {bound, false, inner.nodes};
}

}  // namespace rainbow
