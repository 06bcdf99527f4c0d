#include <catch_amalgamated.hpp>

#include <rainbow/patterns.hpp>

#include "oracles.hpp"

#include <random>

using namespace rainbow;

namespace {

bool kind_present(const std::vector<PatternHit>& hits, PatternKind kind)
{
    for (const auto& h : hits)
        if (h.pattern_kind == kind)
            return true;
    return false;
}

// Validate a reported embedding against its kind's documented layout.
void check_embedding(const Graph& g, const PatternHit& hit)
{
    const auto& e = hit.embedding;
    for (int v : e) {
        CHECK(v != hit.apex);
        CHECK(g.adjacent(hit.apex, v));  // the pattern lives inside N(apex)
    }
    std::set<int> distinct(e.begin(), e.end());
    CHECK(distinct.size() == e.size());
    switch (hit.pattern_kind) {
    case PatternKind::TRIANGLE_TWO_PENDANTS: {
        REQUIRE(e.size() == 5);
        CHECK(g.adjacent(e[0], e[1]));
        CHECK(g.adjacent(e[1], e[2]));
        CHECK(g.adjacent(e[0], e[2]));
        CHECK(g.adjacent(e[0], e[3]));  // pendant at first corner
        CHECK(g.adjacent(e[1], e[4]));  // pendant at second corner
        break;
    }
    case PatternKind::C4: {
        REQUIRE(e.size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(g.adjacent(e[static_cast<std::size_t>(i)],
                             e[static_cast<std::size_t>((i + 1) % 4)]));
        break;
    }
    case PatternKind::LONG_CYCLE_PENDANT: {
        REQUIRE(e.size() >= 6);
        const int m = static_cast<int>(e.size()) - 1;
        for (int i = 0; i < m; ++i)
            CHECK(g.adjacent(e[static_cast<std::size_t>(i)],
                             e[static_cast<std::size_t>((i + 1) % m)]));
        bool pendant_attached = false;
        for (int i = 0; i < m; ++i)
            pendant_attached |= g.adjacent(e.back(), e[static_cast<std::size_t>(i)]);
        CHECK(pendant_attached);
        break;
    }
    case PatternKind::D22_SUBDIVISION: {
        REQUIRE(e.size() >= 6);
        const int path_len = static_cast<int>(e.size()) - 4;
        REQUIRE(path_len >= 2);
        for (int i = 0; i + 1 < path_len; ++i)
            CHECK(g.adjacent(e[static_cast<std::size_t>(i)],
                             e[static_cast<std::size_t>(i + 1)]));
        const int a = e[0], b = e[static_cast<std::size_t>(path_len - 1)];
        CHECK(g.adjacent(a, e[e.size() - 4]));
        CHECK(g.adjacent(a, e[e.size() - 3]));
        CHECK(g.adjacent(b, e[e.size() - 2]));
        CHECK(g.adjacent(b, e[e.size() - 1]));
        break;
    }
    }
}

// Host graph = apex 0 joined to every configuration vertex.
Graph with_apex(int config_n, const std::vector<Edge>& config_edges)
{
    std::vector<Edge> edges;
    for (int v = 1; v <= config_n; ++v)
        edges.push_back({0, v});
    for (auto [u, v] : config_edges)
        edges.push_back({u + 1, v + 1});
    return Graph(config_n + 1, edges);
}

}  // namespace

TEST_CASE("structure probes on hand graphs")
{
    const Graph p3(3, {{0, 1}, {1, 2}});
    const auto probes = structure_probes(p3);
    CHECK(probes.max_common_neighborhood == 1);
    REQUIRE(probes.diameter.has_value());
    CHECK(*probes.diameter == 2);
    CHECK(probes.degree_one_count == 2);

    const Graph split(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(structure_probes(split).diameter.has_value());

    const Graph k4 = parse_graph6("C~");
    const auto k4probes = structure_probes(k4);
    CHECK(k4probes.max_common_neighborhood == 2);
    CHECK(*k4probes.diameter == 1);
    CHECK(k4probes.degree_one_count == 0);
}

TEST_CASE("each configuration is detected at its apex")
{
    // triangle 1,2,3 with pendants 1-4, 2-5 (host ids)
    const Graph ttp = with_apex(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    CHECK(kind_present(detect_forbidden_patterns(ttp, 0),
                       PatternKind::TRIANGLE_TWO_PENDANTS));

    const Graph c4 = with_apex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(kind_present(detect_forbidden_patterns(c4, 0), PatternKind::C4));

    const Graph lcp =
        with_apex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    CHECK(kind_present(detect_forbidden_patterns(lcp, 0),
                       PatternKind::LONG_CYCLE_PENDANT));

    // path 0-1-2 with leaves 3,4 at one end and 5,6 at the other
    const Graph d22 =
        with_apex(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
    CHECK(kind_present(detect_forbidden_patterns(d22, 0),
                       PatternKind::D22_SUBDIVISION));

    // unsubdivided double star: centers adjacent directly
    const Graph d22_direct =
        with_apex(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(kind_present(detect_forbidden_patterns(d22_direct, 0),
                       PatternKind::D22_SUBDIVISION));
}

TEST_CASE("removing a configuration edge removes the detection")
{
    const Graph ttp = with_apex(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    const Graph no_pendant = ttp.without_edge(2, 5);
    CHECK_FALSE(kind_present(detect_forbidden_patterns(no_pendant, 0),
                             PatternKind::TRIANGLE_TWO_PENDANTS));

    const Graph c4 = with_apex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(kind_present(detect_forbidden_patterns(c4.without_edge(1, 2), 0),
                             PatternKind::C4));

    const Graph lcp =
        with_apex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    CHECK_FALSE(kind_present(detect_forbidden_patterns(lcp.without_edge(1, 6), 0),
                             PatternKind::LONG_CYCLE_PENDANT));

    const Graph d22 =
        with_apex(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
    CHECK_FALSE(kind_present(detect_forbidden_patterns(d22.without_edge(3, 6), 0),
                             PatternKind::D22_SUBDIVISION));
}

TEST_CASE("agreement with tuple-scan oracles on random neighborhoods")
{
    std::mt19937 rng(23u);
    int found[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<int> nd(4, 8);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(3, 3 * n);
        const Graph g = oracle::random_graph(rng, n, md(rng));
        for (int apex = 0; apex < n; ++apex) {
            const Graph h = g.induced(g.neighbor_mask(apex));
            const auto hits = detect_forbidden_patterns(g, apex);
            CHECK(kind_present(hits, PatternKind::TRIANGLE_TWO_PENDANTS) ==
                  oracle::has_triangle_two_pendants(h));
            CHECK(kind_present(hits, PatternKind::C4) == oracle::has_c4(h));
            CHECK(kind_present(hits, PatternKind::LONG_CYCLE_PENDANT) ==
                  oracle::has_long_cycle_pendant(h));
            CHECK(kind_present(hits, PatternKind::D22_SUBDIVISION) ==
                  oracle::has_double_star_subdivision(h));
            for (const auto& hit : hits) {
                ++found[static_cast<int>(hit.pattern_kind)];
                check_embedding(g, hit);
            }
        }
    }
    // the sweep has to have exercised every kind to mean anything
    for (int kind = 0; kind < 4; ++kind) {
        CAPTURE(kind);
        CHECK(found[kind] > 0);
    }
}
