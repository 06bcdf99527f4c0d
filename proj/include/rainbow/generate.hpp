// generate.hpp
// Canonical forms for small graphs and exhaustive generation up to
// isomorphism.  Self-contained: the canonical form is the lexicographically
// greatest upper-triangle bit string over all vertex relabelings, computed by
// position-by-position backtracking with prefix pruning.  At n <= 8 this
// needs no external tooling and doubles as the isomorphism oracle.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Upper-triangle encoding used for canonical forms: bit p of the mask is pair
// (i, j), i < j, in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
inline std::uint64_t upper_triangle_mask(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 11)
        throw std::invalid_argument("upper_triangle_mask: n too large for a 64-bit mask");
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.adjacent(i, j))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

inline Graph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

namespace detail {

// Maximizes the upper-triangle string row by row.  `adj` are adjacency masks,
// `perm` the positions filled so far (perm[p] = original vertex at position
// p).  Row p contributes the bits (p, p+1..n-1); a partial assignment is
// abandoned as soon as its freshly computed row falls below the row the best
// known labeling produces at the same position, and the best string is
// replaced whenever a row strictly beats it.
struct CanonSearch {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> perm;
    std::vector<std::uint64_t> best_rows;   // best_rows[p]: bits of row p, high bit first
    std::vector<int> best_perm;
    bool best_valid = false;

    explicit CanonSearch(int n_, const std::vector<std::uint64_t>& adj_)
        : n(n_), adj(adj_), best_rows(static_cast<std::size_t>(n_), 0)
    {
    }

    void place(int pos, std::uint64_t used)
    {
        if (pos == n) {
            best_valid = true;  // a complete labeling now backs every best_rows entry
            best_perm = perm;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1)
                continue;
            // Bits of column `pos` against the already placed positions,
            // packed with position 0 as the high bit.
            std::uint64_t row = 0;
            for (int p = 0; p < pos; ++p)
                row = row << 1 |
                      (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] >> v & 1);
            if (best_valid) {
                if (row < best_rows[static_cast<std::size_t>(pos)])
                    continue;  // prefix already loses against the best labeling
                if (row > best_rows[static_cast<std::size_t>(pos)]) {
                    // Strictly better prefix: deeper best entries are stale and
                    // will be rewritten on the way down to the next leaf.
                    std::fill(best_rows.begin() + pos + 1, best_rows.end(), 0);
                    best_rows[static_cast<std::size_t>(pos)] = row;
                    best_valid = false;
                }
            } else {
                best_rows[static_cast<std::size_t>(pos)] = row;
            }
            perm.push_back(v);
            place(pos + 1, used | std::uint64_t{1} << v);
            perm.pop_back();
        }
    }
};

}  // namespace detail

// The canonical labeling: a permutation sending this graph to the
// representative of its isomorphism class (perm[position] = original vertex).
inline std::vector<int> canonical_labeling(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 11)
        throw std::invalid_argument("canonical_labeling: supported only at n <= 11");
    if (n == 0)
        return {};
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    detail::CanonSearch search(n, adj);
    search.perm.reserve(static_cast<std::size_t>(n));
    search.place(0, 0);
    return search.best_perm;
}

// Representative upper-triangle mask of g's isomorphism class.
inline std::uint64_t canonical_form(const Graph& g)
{
    auto perm = canonical_labeling(g);
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

// Streams exactly one representative per isomorphism class of graphs on n
// vertices, in increasing order of the representative's upper-triangle mask.
// `edge_count` restricts the stream to graphs with that many edges (-1: all).
// Exhaustive over all 2^(n choose 2) labeled graphs, so n is capped at 8.
inline void enumerate_graphs(int n, const std::function<void(const Graph&)>& yield,
                             int edge_count = -1)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument("enumerate_graphs: exhaustive mode supports only n <= 8");
    if (n == 0) {
        if (edge_count <= 0)
            yield(Graph(0, {}));
        return;
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < std::uint64_t{1} << pairs; ++mask) {
        if (edge_count >= 0 && std::popcount(mask) != edge_count)
            continue;
        Graph g = graph_from_mask(n, mask);
        if (canonical_form(g) == mask)
            yield(g);
    }
}

inline std::vector<Graph> all_graphs_up_to_iso(int n, int edge_count = -1)
{
    std::vector<Graph> out;
    enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, edge_count);
    return out;
}

}  // namespace rainbow
