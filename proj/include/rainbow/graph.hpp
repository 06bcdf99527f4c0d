// graph.hpp
// Simple undirected graphs on at most 64 vertices: validated canonical edge
// lists, adjacency bit masks, BFS distances, and byte-exact graph6 I/O.
//
// The edge list sorted lexicographically on (u, v) with u < v is the single
// canonical edge order; every downstream consumer (coloring search order,
// CNF variable numbering, certificates) indexes edges through it.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Edge = std::pair<int, int>;  // always normalized so first < second

// Normalize an endpoint pair into canonical (min, max) form.
inline Edge make_edge(int u, int v)
{
    if (u == v)
        throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
public:
    Graph() = default;

    // Takes any list of endpoint pairs, normalizes and sorts it, and checks
    // the invariants: no loops, no duplicates, endpoints in [0, n).
    Graph(int n, std::vector<Edge> edge_list)
        : n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
        for (auto& e : edge_list)
            e = make_edge(e.first, e.second);
        std::sort(edge_list.begin(), edge_list.end());
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            if (u < 0 || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") outside vertex range [0, " + std::to_string(n) + ")");
            if (i > 0 && edge_list[i] == edge_list[i - 1])
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
        }
        edges_ = std::move(edge_list);
        adj_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
    }

    static constexpr int max_vertices = 64;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Canonical (lexicographically sorted) edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const
    {
        return u != v && (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

    std::vector<int> neighbors(int v) const
    {
        std::vector<int> out;
        for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    // Position of (u, v) in the canonical edge order, or -1 when absent.
    int edge_index(int u, int v) const
    {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // Copy of this graph with one extra edge (must not already be present).
    Graph with_edge(int u, int v) const
    {
        if (adjacent(u, v))
            throw std::invalid_argument("with_edge: edge already present");
        auto list = edges_;
        list.push_back(make_edge(u, v));
        return Graph(n_, std::move(list));
    }

    // Copy of this graph with one edge removed (must be present).
    Graph without_edge(int u, int v) const
    {
        Edge e = make_edge(u, v);
        auto list = edges_;
        auto it = std::find(list.begin(), list.end(), e);
        if (it == list.end())
            throw std::invalid_argument("without_edge: edge not present");
        list.erase(it);
        return Graph(n_, std::move(list));
    }

    // Subgraph induced on the vertices set in `mask`, relabeled 0..k-1 in
    // increasing order of original id.  `back_map` (when given) receives the
    // new-id -> original-id table.
    Graph induced(std::uint64_t mask, std::vector<int>* back_map = nullptr) const
    {
        std::vector<int> originals;
        std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
        for (std::uint64_t m = mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (v >= n_)
                throw std::invalid_argument("induced: mask vertex outside graph");
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(originals.size());
            originals.push_back(v);
        }
        std::vector<Edge> sub;
        for (auto [u, v] : edges_)
            if (new_id[static_cast<std::size_t>(u)] >= 0 && new_id[static_cast<std::size_t>(v)] >= 0)
                sub.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
        if (back_map)
            *back_map = originals;
        return Graph(static_cast<int>(originals.size()), std::move(sub));
    }

    // BFS distances from `source`; unreachable vertices get -1.
    std::vector<int> bfs_distances(int source) const
    {
        std::vector<int> dist(static_cast<std::size_t>(n_), -1);
        std::vector<int> queue{source};
        dist[static_cast<std::size_t>(source)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (std::uint64_t m = adj_[static_cast<std::size_t>(u)]; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    bool connected() const
    {
        if (n_ <= 1)
            return true;
        auto dist = bfs_distances(0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62): header byte n+63, then the upper triangle
// column-major, six bits per byte, each byte offset by 63.  One graph per
// line; parse errors carry the byte offset of the offending character.
// ---------------------------------------------------------------------------

inline Graph parse_graph6(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("graph6: empty input (offset 0)");
    const int header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 125)
        throw std::invalid_argument("graph6: malformed header byte (offset 0); "
                                    "short form requires n <= 62");
    const int n = header - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body_bytes = (bits + 5) / 6;
    if (text.size() < 1 + body_bytes)
        throw std::invalid_argument("graph6: truncated bit vector (offset " +
                                    std::to_string(text.size()) + ")");
    if (text.size() > 1 + body_bytes)
        throw std::invalid_argument("graph6: trailing data (offset " +
                                    std::to_string(1 + body_bytes) + ")");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte_pos = 1 + bit / 6;
            const int c = static_cast<unsigned char>(text[byte_pos]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: out-of-range character (offset " +
                                            std::to_string(byte_pos) + ")");
            if ((c - 63) >> (5 - bit % 6) & 1)
                edges.emplace_back(u, v);
        }
    }
    // Padding bits after the triangle must be zero.
    for (; bit < body_bytes * 6; ++bit) {
        const std::size_t byte_pos = 1 + bit / 6;
        const int c = static_cast<unsigned char>(text[byte_pos]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: out-of-range character (offset " +
                                        std::to_string(byte_pos) + ")");
        if ((c - 63) >> (5 - bit % 6) & 1)
            throw std::invalid_argument("graph6: nonzero padding bit (offset " +
                                        std::to_string(byte_pos) + ")");
    }
    return Graph(n, std::move(edges));
}

inline std::string to_graph6(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6: short form limited to n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string body((bits + 5) / 6, '\0');
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v))
                body[bit / 6] = static_cast<char>(body[bit / 6] | 1 << (5 - bit % 6));
    for (char& c : body)
        c = static_cast<char>(c + 63);
    return out + body;
}

// ---------------------------------------------------------------------------
// Graphviz export: one undirected edge per line, stable order.
// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g, const std::string& name = "G")
{
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace rainbow
