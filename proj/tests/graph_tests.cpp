#include <catch_amalgamated.hpp>

#include <rainbow/graph.hpp>

#include "oracles.hpp"

#include <random>
#include <set>

using namespace rainbow;

TEST_CASE("edges normalize and validate")
{
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);

    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // dup
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
}

TEST_CASE("adjacency, degrees, neighbors")
{
    const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(2, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.neighbors(4) == std::vector<int>{3});
}

TEST_CASE("canonical edge order and edge_index")
{
    const Graph g(4, {{2, 3}, {0, 1}, {1, 3}});
    const std::vector<Edge> want{{0, 1}, {1, 3}, {2, 3}};
    CHECK(g.edges() == want);
    CHECK(g.edge_index(3, 1) == 1);
    CHECK(g.edge_index(0, 1) == 0);
    CHECK(g.edge_index(0, 3) == -1);
}

TEST_CASE("with_edge and without_edge round trip")
{
    const Graph g(4, {{0, 1}, {2, 3}});
    const Graph plus = g.with_edge(1, 2);
    CHECK(plus.edge_count() == 3);
    CHECK(plus.adjacent(1, 2));
    CHECK(plus.without_edge(2, 1) == g);
    CHECK_THROWS_AS(g.with_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.without_edge(0, 2), std::invalid_argument);
}

TEST_CASE("induced subgraph relabels in increasing order")
{
    const Graph g(5, {{0, 2}, {0, 4}, {2, 4}, {1, 3}});
    std::vector<int> back;
    const Graph h = g.induced((1ull << 0) | (1ull << 2) | (1ull << 4), &back);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);  // the triangle 0-2-4
    CHECK(back == std::vector<int>{0, 2, 4});
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
    CHECK(h.adjacent(0, 2));
}

TEST_CASE("bfs distances and connectivity")
{
    const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.bfs_distances(0) == std::vector<int>{0, 1, 2, 3});
    CHECK(path.connected());

    const Graph split(4, {{0, 1}, {2, 3}});
    const auto dist = split.bfs_distances(0);
    CHECK(dist[1] == 1);
    CHECK(dist[2] == -1);
    CHECK_FALSE(split.connected());

    CHECK(Graph(1, {}).connected());
    CHECK(Graph(0, {}).connected());
}

TEST_CASE("graph6 decodes the documented example")
{
    // "C~" is the complete graph on 4 vertices.
    const Graph k4 = parse_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(k4.adjacent(u, v));
    CHECK(to_graph6(k4) == "C~");
}

TEST_CASE("graph6 encodes small named graphs")
{
    CHECK(to_graph6(Graph(0, {})) == "?");
    CHECK(to_graph6(Graph(1, {})) == "@");
    // 5-cycle: triangle bits 1 01 001 1001, packed 101001 100100 = "hc"
    CHECK(to_graph6(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) ==
          "Dhc");
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937 rng(7u);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(0, 20);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(0, n * (n - 1) / 2);
        const Graph g = oracle::random_graph(rng, n, md(rng));
        const std::string enc = to_graph6(g);
        const Graph back = parse_graph6(enc);
        CHECK(back == g);
        CHECK(to_graph6(back) == enc);
    }
}

TEST_CASE("graph6 rejects malformed input with offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);   // trailing
    CHECK_THROWS_AS(parse_graph6("C\x1f"), std::invalid_argument); // bad byte
    CHECK_THROWS_AS(parse_graph6(std::string(1, '\x7f')), std::invalid_argument);
    // nonzero padding: K2 is "A_"; "A" + byte with stray low bits set
    CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);
}

TEST_CASE("dot export lists every vertex and edge")
{
    const Graph g(3, {{0, 1}, {1, 2}});
    const std::string dot = to_dot(g, "demo");
    CHECK(dot.find("graph demo {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("  2;") != std::string::npos);
}
