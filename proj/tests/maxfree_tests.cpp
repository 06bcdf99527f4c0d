#include <catch_amalgamated.hpp>

#include <rainbow/constructions.hpp>
#include <rainbow/cycles.hpp>
#include <rainbow/maxfree.hpp>

#include "oracles.hpp"

#include <random>
#include <set>

using namespace rainbow;

namespace {

void check_witness(const Graph& g, int k, const MaxFreeResult& result)
{
    CHECK(result.witness.vertex_count() == g.vertex_count());
    CHECK(result.witness.edge_count() == result.best_count);
    CHECK(enumerate_cycles(result.witness, k).empty());
    const auto& host = g.edges();
    const std::set<Edge> host_edges(host.begin(), host.end());
    for (const Edge& e : result.witness.edges())
        CHECK(host_edges.count(e) == 1);
}

}  // namespace

TEST_CASE("hand-sized maxima")
{
    // In K4 minus any single edge uv the 4-cycle u-x-v-y-u survives, so two
    // edges must go.
    const Graph k4 = parse_graph6("C~");
    const auto r4 = max_cycle_free_subgraph(k4, 4);
    CHECK(r4.best_count == 4);
    check_witness(k4, 4, r4);

    // A lone 6-cycle loses exactly one edge.
    const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    const auto r6 = max_cycle_free_subgraph(c6, 6);
    CHECK(r6.best_count == 5);
    check_witness(c6, 6, r6);

    // No k-cycles at all: everything stays.
    const auto rtri = max_cycle_free_subgraph(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 4);
    CHECK(rtri.best_count == 3);

    // K4 and triangles: every triangle loses an edge, and 4 edges with no
    // triangle exist (the 4-cycle), so the maximum is 4.
    const auto rk3 = max_cycle_free_subgraph(k4, 3);
    CHECK(rk3.best_count == 4);
    check_witness(k4, 3, rk3);
}

TEST_CASE("agreement with subset enumeration on random graphs")
{
    std::mt19937 rng(55u);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> nd(4, 7);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(0, std::min(13, n * (n - 1) / 2));
        const Graph g = oracle::random_graph(rng, n, md(rng));
        std::uniform_int_distribution<int> kd(3, 6);
        const int k = kd(rng);
        const auto result = max_cycle_free_subgraph(g, k);
        CAPTURE(to_graph6(g), k);
        CHECK(result.best_count == oracle::max_cycle_free(g, k));
        check_witness(g, k, result);
    }
}

TEST_CASE("the eight-vertex core keeps fifteen of its twenty-four edges")
{
    const auto core = build_named_fixture("core");
    const auto result = max_cycle_free_subgraph(core.graph, 6);
    CHECK(result.best_count == 15);
    check_witness(core.graph, 6, result);
}

TEST_CASE("input guards")
{
    const Graph k4 = parse_graph6("C~");
    CHECK_THROWS_AS(max_cycle_free_subgraph(k4, 2), std::invalid_argument);

    std::vector<Edge> dense;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            dense.push_back({u, v});
    CHECK_THROWS_AS(max_cycle_free_subgraph(Graph(9, dense), 4), std::invalid_argument);
}
