// cycles.hpp
// Exact-once enumeration of k-cycles in a graph.  Each cycle is stored in a
// canonical vertex order (minimal rotation, then minimal of the two
// orientations), so the 2k symmetric traversals of one cycle collapse to a
// single representative and the output order is reproducible.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct CycleEmbedding {
    // k distinct vertices; consecutive entries (cyclically) are adjacent.
    // Canonical form: vertices[0] is the minimum id and vertices[1] <
    // vertices[k-1], which is the lexicographically least of all rotations
    // and reflections (vertex ids are distinct, so ties cannot occur).
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    // The k edges of the cycle, each normalized, in traversal order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
        return out;
    }

    bool operator==(const CycleEmbedding& other) const = default;
    bool operator<(const CycleEmbedding& other) const { return vertices < other.vertices; }
};

// Rewrite an arbitrary closed walk over distinct vertices into the canonical
// form described on CycleEmbedding.
inline CycleEmbedding canonical_cycle(std::vector<int> vertices)
{
    const std::size_t k = vertices.size();
    if (k < 3)
        throw std::invalid_argument("canonical_cycle: need at least 3 vertices");
    std::size_t lo = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (vertices[i] < vertices[lo])
            lo = i;
    std::vector<int> out(k);
    if (vertices[(lo + 1) % k] < vertices[(lo + k - 1) % k])
        for (std::size_t i = 0; i < k; ++i)
            out[i] = vertices[(lo + i) % k];
    else
        for (std::size_t i = 0; i < k; ++i)
            out[i] = vertices[(lo + k - i) % k];
    return CycleEmbedding{std::move(out)};
}

// All k-cycles of g, one canonical embedding per cycle, sorted
// lexicographically by their canonical vertex sequence.
//
// The search anchors each cycle at its minimum vertex: paths grow from the
// anchor through strictly larger vertices, and a completed cycle is kept only
// when its second vertex is smaller than its last, which is exactly the
// canonical orientation.  Visiting anchors and neighbors in increasing order
// therefore emits canonical forms already sorted.
inline std::vector<CycleEmbedding> enumerate_cycles(const Graph& g, int k)
{
    if (k < 3)
        throw std::invalid_argument("enumerate_cycles: cycles have at least 3 vertices");
    std::vector<CycleEmbedding> out;
    if (k > g.vertex_count())
        return out;  // no k distinct vertices to pass through
    std::vector<int> path(static_cast<std::size_t>(k));
    std::uint64_t used = 0;

    // Depth-first extension of path[0..depth) by vertices above the anchor.
    auto extend = [&](auto&& self, int depth) -> void {
        const int anchor = path[0];
        const int tip = path[static_cast<std::size_t>(depth - 1)];
        if (depth == k) {
            if (g.adjacent(tip, anchor) && path[1] < path[static_cast<std::size_t>(k - 1)])
                out.push_back(CycleEmbedding{path});
            return;
        }
        for (std::uint64_t m = g.neighbor_mask(tip) & ~used; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (w <= anchor)
                continue;
            path[static_cast<std::size_t>(depth)] = w;
            used |= std::uint64_t{1} << w;
            self(self, depth + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    };

    for (int anchor = 0; anchor < g.vertex_count(); ++anchor) {
        path[0] = anchor;
        used = std::uint64_t{1} << anchor;
        extend(extend, 1);
        used = 0;
    }
    return out;
}

}  // namespace rainbow
