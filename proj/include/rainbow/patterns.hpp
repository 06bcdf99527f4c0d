// patterns.hpp
// Structural probes used by saturation audits (largest common neighborhood,
// diameter, degree-1 count) and detection of the four neighborhood patterns
// that make a vertex uncolorable when they sit inside N(v): a triangle with
// pendant edges at two of its corners, a 4-cycle, a longer cycle carrying a
// pendant edge, and a double star with two leaves per center (its center
// edge possibly subdivided into a longer path).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct StructureProbes {
    // max over unordered vertex pairs u != v of |N(u) ∩ N(v)|; 0 when n < 2
    int max_common_neighborhood = 0;
    // empty when the graph is disconnected ("infinite")
    std::optional<int> diameter;
    int degree_one_count = 0;
};

inline StructureProbes structure_probes(const Graph& g)
{
    StructureProbes out;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.max_common_neighborhood =
                std::max(out.max_common_neighborhood,
                         std::popcount(g.neighbor_mask(u) & g.neighbor_mask(v)));
    if (g.connected()) {
        int ecc_max = 0;
        for (int v = 0; v < n; ++v) {
            auto dist = g.bfs_distances(v);
            ecc_max = std::max(ecc_max, *std::max_element(dist.begin(), dist.end()));
        }
        out.diameter = n == 0 ? 0 : ecc_max;
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            ++out.degree_one_count;
    return out;
}

enum class PatternKind {
    TRIANGLE_TWO_PENDANTS,  // K3 plus pendant edges at two distinct corners
    C4,                     // 4-cycle
    LONG_CYCLE_PENDANT,     // C_m (m >= 5) plus a pendant edge
    D22_SUBDIVISION,        // path on >= 2 vertices, two extra leaves at each end
};

inline std::string to_string(PatternKind kind)
{
    switch (kind) {
    case PatternKind::TRIANGLE_TWO_PENDANTS: return "TRIANGLE_TWO_PENDANTS";
    case PatternKind::C4: return "C4";
    case PatternKind::LONG_CYCLE_PENDANT: return "LONG_CYCLE_PENDANT";
    case PatternKind::D22_SUBDIVISION: return "D22_SUBDIVISION";
    }
    return "?";
}

struct PatternHit {
    PatternKind pattern_kind;
    int apex;  // the pattern lives inside N(apex)
    // Vertex list, layout by kind:
    //   TRIANGLE_TWO_PENDANTS: [a, b, c, p, q] — triangle abc, pendants a-p, b-q
    //   C4:                    the cycle in canonical order
    //   LONG_CYCLE_PENDANT:    cycle in canonical order, then the pendant vertex
    //   D22_SUBDIVISION:       path from one center to the other, then the two
    //                          leaves at the first center, then the two at the last
    std::vector<int> embedding;
};

namespace detail {

// Triangle with pendant edges at two distinct corners, searched inside h.
// Returns [a, b, c, p, q] with triangle abc and pendant edges a-p, b-q, all
// five vertices distinct; first hit in deterministic order.
inline std::optional<std::vector<int>> find_triangle_two_pendants(const Graph& h)
{
    if (h.vertex_count() < 5)
        return std::nullopt;
    for (const auto& tri : enumerate_cycles(h, 3)) {
        std::uint64_t tri_mask = 0;
        for (int t : tri.vertices)
            tri_mask |= std::uint64_t{1} << t;
        // Ordered pair of pendant-bearing corners (a, b); c is the third.
        for (int a : tri.vertices) {
            for (int b : tri.vertices) {
                if (a == b)
                    continue;
                int c = tri.vertices[0] ^ tri.vertices[1] ^ tri.vertices[2] ^ a ^ b;
                for (int p : h.neighbors(a)) {
                    if (tri_mask >> p & 1)
                        continue;
                    for (int q : h.neighbors(b)) {
                        if ((tri_mask >> q & 1) || q == p)
                            continue;
                        return std::vector<int>{a, b, c, p, q};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Cycle of length >= 5 with a pendant edge; returns the cycle followed by the
// pendant vertex (adjacent to at least one cycle vertex).
inline std::optional<std::vector<int>> find_long_cycle_pendant(const Graph& h)
{
    for (int m = 5; m + 1 <= h.vertex_count(); ++m) {
        for (const auto& cyc : enumerate_cycles(h, m)) {
            std::uint64_t cyc_mask = 0;
            for (int c : cyc.vertices)
                cyc_mask |= std::uint64_t{1} << c;
            for (int c : cyc.vertices)
                for (int p : h.neighbors(c))
                    if (!(cyc_mask >> p & 1)) {
                        auto out = cyc.vertices;
                        out.push_back(p);
                        return out;
                    }
        }
    }
    return std::nullopt;
}

// Two distinct leaves for each path end, all four distinct and off the path.
// A and B are the candidate leaf sets at the two ends.
inline std::optional<std::array<int, 4>> pick_double_star_leaves(const std::vector<int>& a_set,
                                                                 const std::vector<int>& b_set)
{
    for (std::size_t i = 0; i < a_set.size(); ++i)
        for (std::size_t j = i + 1; j < a_set.size(); ++j)
            for (std::size_t k = 0; k < b_set.size(); ++k) {
                if (b_set[k] == a_set[i] || b_set[k] == a_set[j])
                    continue;
                for (std::size_t l = k + 1; l < b_set.size(); ++l) {
                    if (b_set[l] == a_set[i] || b_set[l] == a_set[j])
                        continue;
                    return std::array<int, 4>{a_set[i], a_set[j], b_set[k], b_set[l]};
                }
            }
    return std::nullopt;
}

// Double star (two centers joined by a path of >= 2 vertices, i.e. an edge or
// any subdivision of it, each center carrying two leaves of its own).  The
// centers must have degree >= 3 inside h; every simple center-to-center path
// is tried until one leaves room for four distinct leaves.
inline std::optional<std::vector<int>> find_double_star_subdivision(const Graph& h)
{
    const int n = h.vertex_count();
    if (n < 6)
        return std::nullopt;
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) >= 3)
            centers.push_back(v);

    std::vector<int> path;
    std::uint64_t on_path = 0;
    std::optional<std::vector<int>> found;

    auto leaves_off = [&](int end) {
        std::vector<int> out;
        for (int w : h.neighbors(end))
            if (!(on_path >> w & 1))
                out.push_back(w);
        return out;
    };

    // DFS over simple a-b paths; stops at the first qualifying configuration.
    auto extend = [&](auto&& self, int b) -> bool {
        const int tip = path.back();
        if (tip == b) {
            auto a_leaves = leaves_off(path.front());
            auto b_leaves = leaves_off(b);
            if (a_leaves.size() >= 2 && b_leaves.size() >= 2) {
                if (auto leaves = pick_double_star_leaves(a_leaves, b_leaves)) {
                    auto out = path;
                    out.insert(out.end(), leaves->begin(), leaves->end());
                    found = std::move(out);
                    return true;
                }
            }
            return false;
        }
        for (int w : h.neighbors(tip)) {
            if (on_path >> w & 1)
                continue;
            path.push_back(w);
            on_path |= std::uint64_t{1} << w;
            if (self(self, b))
                return true;
            on_path &= ~(std::uint64_t{1} << w);
            path.pop_back();
        }
        return false;
    };

    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            path = {centers[i]};
            on_path = std::uint64_t{1} << centers[i];
            if (extend(extend, centers[j]))
                return found;
        }
    return std::nullopt;
}

}  // namespace detail

// Searches g restricted to N(apex) for each of the four patterns and reports
// one hit per pattern kind present (vertices in original graph ids).
inline std::vector<PatternHit> detect_forbidden_patterns(const Graph& g, int apex)
{
    std::vector<int> originals;
    Graph h = g.induced(g.neighbor_mask(apex), &originals);

    auto lifted = [&](const std::vector<int>& local) {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local)
            out.push_back(originals[static_cast<std::size_t>(v)]);
        return out;
    };

    std::vector<PatternHit> hits;
    if (auto e = detail::find_triangle_two_pendants(h))
        hits.push_back({PatternKind::TRIANGLE_TWO_PENDANTS, apex, lifted(*e)});
    if (h.vertex_count() >= 4) {
        auto c4s = enumerate_cycles(h, 4);
        if (!c4s.empty())
            hits.push_back({PatternKind::C4, apex, lifted(c4s.front().vertices)});
    }
    if (auto e = detail::find_long_cycle_pendant(h))
        hits.push_back({PatternKind::LONG_CYCLE_PENDANT, apex, lifted(*e)});
    if (auto e = detail::find_double_star_subdivision(h))
        hits.push_back({PatternKind::D22_SUBDIVISION, apex, lifted(*e)});
    return hits;
}

}  // namespace rainbow
