// maxfree.hpp
// Exact maximum k-cycle-free subgraph by branch and bound.
//
// The size of a largest subgraph of G containing no k-cycle is an upper bound
// on the number of colors any proper rainbow-k-cycle-free coloring of G can
// use: picking one edge of each color class yields a rainbow subgraph, and a
// k-cycle inside it would be a rainbow k-cycle of G.  The exact value is
// therefore the sharpest palette cap we can hand to the coloring engines.
//
// The search branches on edges in canonical order, include-first, so the
// first optimum found selects the earliest canonical edges; improvements are
// strict, which keeps that witness.  A cycle is tracked by how many of its
// edges are already included — including its last edge is refused — and the
// trivial bound (selected + undecided <= best) prunes the tail.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct MaxFreeResult {
    int best_count = 0;        // edges in a maximum k-cycle-free subgraph
    Graph witness;             // such a subgraph, on the same vertex set
    std::uint64_t nodes = 0;   // branch-and-bound nodes visited
};

namespace detail {

class MaxFreeSearch {
public:
    MaxFreeSearch(const Graph& g, int k) : g_(g)
    {
        m_ = g.edge_count();
        cycles_of_edge_.resize(static_cast<std::size_t>(m_));
        const auto cycles = enumerate_cycles(g, k);
        included_.assign(cycles.size(), 0);
        cycle_length_ = k;
        for (std::size_t cid = 0; cid < cycles.size(); ++cid)
            for (const Edge& e : cycles[cid].edges())
                cycles_of_edge_[static_cast<std::size_t>(g.edge_index(e.first, e.second))]
                    .push_back(static_cast<int>(cid));
    }

    MaxFreeResult run()
    {
        best_ = -1;
        dfs(0, 0);
        std::vector<Edge> kept;
        const auto& edges = g_.edges();
        for (int e = 0; e < m_; ++e)
            if (best_set_ >> e & 1)
                kept.push_back(edges[static_cast<std::size_t>(e)]);
        MaxFreeResult result{best_, Graph(g_.vertex_count(), kept), nodes_};
        if (result.witness.edge_count() != best_ ||
            !enumerate_cycles(result.witness, cycle_length_).empty())
            throw std::logic_error("max_cycle_free_subgraph: witness fails its own check");
        return result;
    }

private:
    void dfs(int pos, int selected)
    {
        ++nodes_;
        if (pos == m_) {
            if (selected > best_) {
                best_ = selected;
                best_set_ = current_set_;
            }
            return;
        }
        if (selected + (m_ - pos) <= best_)
            return;

        const auto& touched = cycles_of_edge_[static_cast<std::size_t>(pos)];
        bool completes = false;
        for (int cid : touched)
            if (included_[static_cast<std::size_t>(cid)] + 1 == cycle_length_) {
                completes = true;
                break;
            }
        if (!completes) {
            for (int cid : touched)
                ++included_[static_cast<std::size_t>(cid)];
            current_set_ |= std::uint32_t{1} << pos;
            dfs(pos + 1, selected + 1);
            current_set_ &= ~(std::uint32_t{1} << pos);
            for (int cid : touched)
                --included_[static_cast<std::size_t>(cid)];
        }
        dfs(pos + 1, selected);
    }

    const Graph& g_;
    int m_ = 0;
    int cycle_length_ = 0;
    std::vector<std::vector<int>> cycles_of_edge_;
    std::vector<int> included_;
    int best_ = -1;
    std::uint32_t best_set_ = 0;
    std::uint32_t current_set_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact maximum k-cycle-free subgraph.  Refuses graphs with more than 30
// edges: the search is exponential in the edge count, and callers above that
// size should fall back to the greedy peeling bound instead.
inline MaxFreeResult max_cycle_free_subgraph(const Graph& g, int k)
{
    if (k < 3)
        throw std::invalid_argument("max_cycle_free_subgraph: cycles have at least 3 vertices");
    if (g.edge_count() > 30)
        throw std::invalid_argument(
            "max_cycle_free_subgraph: exact search is limited to 30 edges");
    return detail::MaxFreeSearch(g, k).run();
}

}  // namespace rainbow
