// constructions.hpp
// The three extremal constructions with their certificate colorings, plus the
// four named fixtures (core, core+T1, H, F) anchoring the 6-cycle analysis.
// Every witness coloring is machine-verified at build time — a builder that
// would return an improper or rainbow-carrying certificate throws instead.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Spider S_{a,b,c}: three paths of lengths a, b, c sharing one endpoint.
struct SpiderSpec {
    int legs[3];

    int vertex_count() const { return 1 + legs[0] + legs[1] + legs[2]; }
    int edge_count() const { return legs[0] + legs[1] + legs[2]; }
};

enum class VertexRole { UNIVERSAL, SPIDER_MEMBER, MATCHING_MEMBER, CORE, TRIANGLE_MEMBER, EXTRA };

inline std::string to_string(VertexRole role)
{
    switch (role) {
    case VertexRole::UNIVERSAL: return "universal";
    case VertexRole::SPIDER_MEMBER: return "spider-member";
    case VertexRole::MATCHING_MEMBER: return "matching-member";
    case VertexRole::CORE: return "core";
    case VertexRole::TRIANGLE_MEMBER: return "triangle-member";
    case VertexRole::EXTRA: return "extra";
    }
    return "?";
}

struct RoleLabel {
    VertexRole role;
    int component = -1;  // which spider / matching pair / triangle; -1 if n/a
};

struct ConstructionResult {
    Graph graph;
    int target_cycle = 0;                 // the k this construction is saturated for
    std::vector<RoleLabel> role_labels;   // indexed by vertex
    std::optional<EdgeColoring> witness;  // proper and rainbow-free, verified
};

namespace detail {

// Verifies the certificate before anyone can see it.
inline void seal_witness(ConstructionResult& result)
{
    if (!result.witness)
        return;
    if (!verifies(result.graph, *result.witness, result.target_cycle))
        throw std::logic_error("construction produced a witness that fails verification");
}

// Appends one spider (legs 1, alpha, beta with alpha, beta >= 2) hanging off
// the universal vertex u, coloring its star and tree edges with the fixed
// scheme below, using component-local colors 0..(r-1) shifted by
// `color_base`.  Vertices are appended starting at `first_id`; returns the id
// one past the spider.
//
// Component-local scheme (r = 1 + 1 + alpha + beta vertices; center s0, long
// legs a_1..a_alpha and b_1..b_beta, short leg p), written 1-based:
//   star:   c(u,a_i) = alpha+1-i   c(u,s0) = alpha+1   c(u,p) = alpha+2
//           c(u,b_i) = alpha+2+i
//   spider: c(s0,p) = alpha        c(s0,a_1) = alpha+3  c(s0,b_1) = alpha+2
//           c(a_i,a_{i+1}) = c(u,a_{i-1})   (a_0 = s0)
//           c(b_i,b_{i+1}) = c(u,b_{i-1})   (b_0 = s0)
// Every path x-y-z inside the spider satisfies c(x,y) = c(u,z) or
// c(y,z) = c(u,x), so every 4-cycle through u repeats a color; the spider
// itself is a tree, so no other 4-cycles exist.
inline int append_spider(std::vector<Edge>& edges, std::map<Edge, int>& color_of, int u,
                         int first_id, int alpha, int beta, int color_base)
{
    const int s0 = first_id;
    const int p = first_id + 1;
    const int a = first_id + 2;           // a_i = a + (i-1)
    const int b = first_id + 2 + alpha;   // b_i = b + (i-1)

    // 1-based component-local colors, shifted to the global palette.
    auto col = [&](int local) { return color_base + local - 1; };
    auto star_a = [&](int i) { return col(alpha + 1 - i); };
    auto star_b = [&](int i) { return col(alpha + 2 + i); };

    auto add = [&](int x, int y, int color) {
        edges.push_back(make_edge(x, y));
        color_of[make_edge(x, y)] = color;
    };

    add(u, s0, col(alpha + 1));
    add(u, p, col(alpha + 2));
    add(s0, p, col(alpha));
    add(s0, a, col(alpha + 3));
    add(s0, b, col(alpha + 2));
    for (int i = 1; i <= alpha; ++i)
        add(u, a + i - 1, star_a(i));
    for (int i = 1; i <= beta; ++i)
        add(u, b + i - 1, star_b(i));
    for (int i = 1; i < alpha; ++i)  // edge a_i a_{i+1}
        add(a + i - 1, a + i, i == 1 ? col(alpha + 1) : star_a(i - 1));
    for (int i = 1; i < beta; ++i)   // edge b_i b_{i+1}
        add(b + i - 1, b + i, i == 1 ? col(alpha + 1) : star_b(i - 1));
    return first_id + 1 + 1 + alpha + beta;
}

}  // namespace detail

// Universal vertex u = 0 whose neighborhood induces m-1 copies of S_{1,2,2}
// plus one residual spider, m = floor((n-1)/6).  The residual spider takes
// the r = (n-1) - 6(m-1) remaining vertices, legs (1, ceil((r-2)/2),
// floor((r-2)/2)).  Edge count 2(n-1) - m.  Components use pairwise disjoint
// palettes, so properness and rainbow-freeness transfer across components.
inline ConstructionResult build_c4_construction(int n)
{
    if (n < 7)
        throw std::invalid_argument("build_c4_construction: need n >= 7");
    const int m = (n - 1) / 6;
    const int r = (n - 1) - 6 * (m - 1);

    std::vector<Edge> edges;
    std::map<Edge, int> color_of;
    ConstructionResult result;
    result.target_cycle = 4;
    result.role_labels.assign(static_cast<std::size_t>(n), {});
    result.role_labels[0] = {VertexRole::UNIVERSAL, -1};

    int next = 1;
    int color_base = 0;
    for (int spider = 0; spider < m; ++spider) {
        const bool residual = spider == m - 1;
        const int alpha = residual ? (r - 2 + 1) / 2 : 2;
        const int beta = residual ? (r - 2) / 2 : 2;
        const int first = next;
        next = detail::append_spider(edges, color_of, 0, next, alpha, beta, color_base);
        for (int v = first; v < next; ++v)
            result.role_labels[static_cast<std::size_t>(v)] = {VertexRole::SPIDER_MEMBER, spider};
        color_base += residual ? r : 6;
    }

    result.graph = Graph(n, std::move(edges));
    std::vector<int> colors(static_cast<std::size_t>(result.graph.edge_count()));
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = color_of.at(result.graph.edges()[i]);
    result.witness = EdgeColoring{std::move(colors)};
    detail::seal_witness(result);
    return result;
}

// Two universal vertices u = 0, v = 1 plus a maximum matching on the rest
// (one unmatched vertex z when n is odd).  Edge count floor(5n/2) - 4.
// Certificate: c(u x_i) = c(v y_i) = 2i-1, c(u y_i) = c(v x_i) = 2i,
// c(uv) = c(x_i y_i) = 0, and the odd vertex z uses two fresh colors n-2, n-1.
inline ConstructionResult build_c5_construction(int n)
{
    if (n < 8)
        throw std::invalid_argument("build_c5_construction: need n >= 8");
    std::vector<Edge> edges;
    std::map<Edge, int> color_of;
    auto add = [&](int x, int y, int color) {
        edges.push_back(make_edge(x, y));
        color_of[make_edge(x, y)] = color;
    };

    ConstructionResult result;
    result.target_cycle = 5;
    result.role_labels.assign(static_cast<std::size_t>(n), {});
    result.role_labels[0] = {VertexRole::UNIVERSAL, -1};
    result.role_labels[1] = {VertexRole::UNIVERSAL, -1};

    add(0, 1, 0);
    const int pairs = (n - 2) / 2;
    for (int i = 1; i <= pairs; ++i) {
        const int x = 2 * i;
        const int y = 2 * i + 1;
        add(0, x, 2 * i - 1);
        add(1, y, 2 * i - 1);
        add(0, y, 2 * i);
        add(1, x, 2 * i);
        add(x, y, 0);
        result.role_labels[static_cast<std::size_t>(x)] = {VertexRole::MATCHING_MEMBER, i - 1};
        result.role_labels[static_cast<std::size_t>(y)] = {VertexRole::MATCHING_MEMBER, i - 1};
    }
    if (n % 2 == 1) {
        add(0, n - 1, n - 2);
        add(1, n - 1, n - 1);
        result.role_labels[static_cast<std::size_t>(n - 1)] = {VertexRole::EXTRA, -1};
    }

    result.graph = Graph(n, std::move(edges));
    std::vector<int> colors(static_cast<std::size_t>(result.graph.edge_count()));
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = color_of.at(result.graph.edges()[i]);
    result.witness = EdgeColoring{std::move(colors)};
    detail::seal_witness(result);
    return result;
}

namespace detail {

// Shared shape behind build_c6_construction and the named fixtures: the core
// (vertices 0..7 = v1..v8 inducing K8 minus the matching {v1v3, v2v8, v4v6,
// v5v7}), `triangles` attached triangles, and 0..2 extra vertices adjacent to
// v1 and v3 (and to each other when there are two).
inline ConstructionResult build_c6_shape(int triangles, int extras)
{
    const int n = 8 + 3 * triangles + extras;
    std::vector<Edge> edges;
    std::map<Edge, int> color_of;
    auto add = [&](int x, int y, int color) {
        edges.push_back(make_edge(x, y));
        color_of[make_edge(x, y)] = color;
    };

    ConstructionResult result;
    result.target_cycle = 6;
    result.role_labels.assign(static_cast<std::size_t>(n), {});

    // Core: K8 minus {v1v3, v2v8, v4v6, v5v7}, colored by six perfect
    // matchings (colors 0..5).
    const std::vector<std::vector<Edge>> matching_classes = {
        {{1, 2}, {0, 7}, {3, 4}, {5, 6}},
        {{1, 6}, {0, 3}, {4, 7}, {2, 5}},
        {{1, 5}, {0, 4}, {2, 6}, {3, 7}},
        {{0, 1}, {4, 5}, {2, 7}, {3, 6}},
        {{1, 4}, {0, 5}, {6, 7}, {2, 3}},
        {{2, 4}, {5, 7}, {1, 3}, {0, 6}},
    };
    for (std::size_t color = 0; color < matching_classes.size(); ++color)
        for (auto [x, y] : matching_classes[color])
            add(x, y, static_cast<int>(color));
    for (int v = 0; v < 8; ++v)
        result.role_labels[static_cast<std::size_t>(v)] = {VertexRole::CORE, -1};

    // Triangles T_i = {x_i, y_i, z_i}, attached by v1 x_i, v1 y_i, v2 z_i,
    // v3 y_i; colors 3+3i / 4+3i / 5+3i with i 1-based, plus color 0 on y z.
    for (int i = 1; i <= triangles; ++i) {
        const int x = 8 + 3 * (i - 1);
        const int y = x + 1;
        const int z = x + 2;
        add(0, x, 3 + 3 * i);
        add(0, y, 4 + 3 * i);
        add(1, z, 3 + 3 * i);
        add(2, y, 3 + 3 * i);
        add(y, z, 0);
        add(x, z, 4 + 3 * i);
        add(x, y, 5 + 3 * i);
        for (int w : {x, y, z})
            result.role_labels[static_cast<std::size_t>(w)] = {VertexRole::TRIANGLE_MEMBER, i - 1};
    }

    // Extra vertices adjacent to v1 and v3 on fresh colors; with two extras
    // the colors are crossed (c(v1 s) = c(v3 t), c(v1 t) = c(v3 s)) and the
    // connecting edge reuses color 0, which neither end sees.
    const int fresh = 6 + 3 * triangles;
    if (extras >= 1) {
        const int s = 8 + 3 * triangles;
        add(0, s, fresh);
        add(2, s, fresh + 1);
        result.role_labels[static_cast<std::size_t>(s)] = {VertexRole::EXTRA, -1};
        if (extras == 2) {
            const int t = s + 1;
            add(0, t, fresh + 1);
            add(2, t, fresh);
            add(s, t, 0);
            result.role_labels[static_cast<std::size_t>(t)] = {VertexRole::EXTRA, -1};
        }
    }

    result.graph = Graph(n, std::move(edges));
    std::vector<int> colors(static_cast<std::size_t>(result.graph.edge_count()));
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = color_of.at(result.graph.edges()[i]);
    result.witness = EdgeColoring{std::move(colors)};
    seal_witness(result);
    return result;
}

}  // namespace detail

// Core plus (n-8-extras)/3 triangles plus `extras` = (n-8) mod 3 extra
// vertices, so the triangle count is maximal with 0..2 extras left over.
inline ConstructionResult build_c6_construction(int n)
{
    if (n < 14)
        throw std::invalid_argument("build_c6_construction: need n >= 14");
    const int extras = (n - 8) % 3;
    return detail::build_c6_shape((n - 8 - extras) / 3, extras);
}

// The four fixtures of the 6-cycle analysis:
//   core     — K8 minus the matching, 24 edges
//   core+T1  — core plus one triangle, 31 edges
//   H        — core plus two triangles, 38 edges
//   F        — core plus one triangle plus one degree-2 extra, 33 edges
inline ConstructionResult build_named_fixture(const std::string& name)
{
    if (name == "core")
        return detail::build_c6_shape(0, 0);
    if (name == "core+T1")
        return detail::build_c6_shape(1, 0);
    if (name == "H")
        return detail::build_c6_shape(2, 0);
    if (name == "F")
        return detail::build_c6_shape(1, 1);
    throw std::invalid_argument("build_named_fixture: unknown fixture '" + name +
                                "' (expected core, core+T1, H, F)");
}

}  // namespace rainbow
