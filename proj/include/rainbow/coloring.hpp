// coloring.hpp
// Edge colorings over the canonical edge order, properness checking, and the
// rainbow-freeness verifier: a coloring is rainbow-free for cycle length k
// when no k-cycle's edges receive k pairwise distinct colors.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct EdgeColoring {
    // colors[i] is the color of edge i in the canonical edge order; total map.
    std::vector<int> colors;

    int color_of(int edge_index) const { return colors[static_cast<std::size_t>(edge_index)]; }

    // Number of distinct colors actually used.
    int used_colors() const
    {
        std::set<int> d(colors.begin(), colors.end());
        return static_cast<int>(d.size());
    }

    bool operator==(const EdgeColoring& other) const = default;
};

// Pairs of incident edges that received equal colors (empty iff proper).
inline std::vector<std::pair<Edge, Edge>> improper_pairs(const Graph& g, const EdgeColoring& col)
{
    if (col.colors.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("coloring is not total on E(G)");
    std::vector<std::pair<Edge, Edge>> bad;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            const bool incident = a == c || a == d || b == c || b == d;
            if (incident && col.colors[i] == col.colors[j])
                bad.emplace_back(edges[i], edges[j]);
        }
    return bad;
}

inline bool is_proper(const Graph& g, const EdgeColoring& col)
{
    return improper_pairs(g, col).empty();
}

struct RainbowCheck {
    bool rainbow_free = true;
    std::vector<CycleEmbedding> violations;          // every rainbow C_k copy
    bool proper = true;                              // reported separately;
    std::vector<std::pair<Edge, Edge>> improper;     // rainbow-freeness is
                                                     // evaluated either way
};

// Exhaustive check of every C_k copy; requires a total coloring.
inline RainbowCheck is_rainbow_free(const Graph& g, const EdgeColoring& col, int k)
{
    if (col.colors.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("coloring is not total on E(G)");
    RainbowCheck out;
    out.improper = improper_pairs(g, col);
    out.proper = out.improper.empty();
    if (k > g.vertex_count())
        return out;
    for (const auto& cyc : enumerate_cycles(g, k)) {
        std::vector<int> seen;
        for (auto [u, v] : cyc.edges())
            seen.push_back(col.colors[static_cast<std::size_t>(g.edge_index(u, v))]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) == seen.end())
            out.violations.push_back(cyc);
    }
    out.rainbow_free = out.violations.empty();
    return out;
}

// Convenience: proper AND rainbow-free, the property every certificate
// coloring must satisfy.
inline bool verifies(const Graph& g, const EdgeColoring& col, int k)
{
    auto check = is_rainbow_free(g, col, k);
    return check.proper && check.rainbow_free;
}

}  // namespace rainbow
