#include <catch_amalgamated.hpp>

#include <rainbow/constructions.hpp>
#include <rainbow/interval.hpp>
#include <rainbow/maxfree.hpp>
#include <rainbow/peeling.hpp>
#include <rainbow/report.hpp>
#include <rainbow/saturation.hpp>
#include <rainbow/search.hpp>

using namespace rainbow;

TEST_CASE("graph and coloring serialization")
{
    const Graph k3 = parse_graph6("Bw");
    const Json j = to_json(k3);
    CHECK(j["vertices"] == 3);
    CHECK(j["graph6"] == "Bw");
    REQUIRE(j["edges"].size() == 3);
    CHECK(j["edges"][0] == Json::array({0, 1}));

    EdgeColoring coloring{{0, 1, 0}};
    const Json jc = to_json(coloring);
    CHECK(jc["colors"] == Json::array({0, 1, 0}));
    CHECK(jc["used_colors"] == 2);
}

TEST_CASE("verdict serialization and the deterministic switch")
{
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto verdict = find_rainbow_free_coloring(c4, 4);
    const Json timed = to_json(verdict);
    CHECK(timed.contains("seconds"));
    CHECK(timed["status"] == "FEASIBLE");
    CHECK_FALSE(timed["witness"].is_null());
    CHECK(timed["budget"]["max_nodes"] == SearchBudget{}.max_nodes);

    ReportOptions det;
    det.deterministic = true;
    const Json first = to_json(verdict, det);
    CHECK_FALSE(first.contains("seconds"));

    // Re-running the same search must serialize byte-identically.
    const Json second = to_json(find_rainbow_free_coloring(c4, 4), det);
    CHECK(first.dump(2) == second.dump(2));

    const Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    const Json lost = to_json(find_rainbow_free_coloring(triangle, 3), det);
    CHECK(lost["status"] == "INFEASIBLE");
    CHECK(lost["witness"].is_null());
}

TEST_CASE("rainbow check and probe serialization")
{
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto bad = is_rainbow_free(c4, EdgeColoring{{0, 1, 3, 2}}, 4);
    const Json j = to_json(bad);
    CHECK(j["proper"] == true);
    CHECK(j["rainbow_free"] == false);
    REQUIRE(j["rainbow_cycles"].size() == 1);
    CHECK(j["rainbow_cycles"][0] == Json::array({0, 1, 2, 3}));
    CHECK(j["improper_pairs"].empty());

    const Json disconnected = to_json(structure_probes(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(disconnected["diameter"].is_null());
    CHECK(disconnected["degree_one_count"] == 4);
}

TEST_CASE("construction serialization names every vertex role")
{
    const Json j = to_json(build_c5_construction(9));
    CHECK(j["target_cycle"] == 5);
    CHECK(j["graph"]["vertices"] == 9);
    REQUIRE(j["roles"].size() == 9);
    int universal = 0;
    for (const auto& r : j["roles"])
        if (r["role"] == "universal")
            ++universal;
    CHECK(universal == 2);
    CHECK_FALSE(j["witness"].is_null());
}

TEST_CASE("saturation serialization carries per-non-edge verdicts")
{
    ReportOptions det;
    det.deterministic = true;
    const auto report = check_rainbow_saturated(build_c4_construction(7).graph, 4);
    const Json j = to_json(report, det);
    CHECK(j["k"] == 4);
    CHECK(j["status"] == "SATURATED");
    CHECK(j["base"]["status"] == "FEASIBLE");
    REQUIRE(j["non_edges"].size() == report.non_edges.size());
    for (const auto& entry : j["non_edges"]) {
        CHECK(entry["added"].is_array());
        CHECK(entry["verdict"]["status"] == "INFEASIBLE");
        CHECK_FALSE(entry["verdict"].contains("seconds"));
    }
}

TEST_CASE("sweep and interval serialization")
{
    const Json js = to_json(sat_star(4, 4), ReportOptions{true});
    CHECK(js["n"] == 4);
    CHECK(js["value"] == 6);
    CHECK(js["value_certain"] == true);
    REQUIRE(js["witnesses"].size() == 1);
    CHECK(js["witnesses"][0]["graph6"] == "C~");

    const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const Json ji = to_json(color_interval(c5, 5, 5), ReportOptions{true});
    CHECK(ji["palette_floor"] == 2);
    CHECK(ji["palette_cap"] == 5);
    CHECK(ji["feasible"] == Json::array({3, 4}));
    CHECK(ji["infeasible"] == Json::array({2, 5}));
    CHECK(ji["unknown"].empty());
    CHECK(ji["max_feasible"] == 4);
    REQUIRE(ji["entries"].size() == 4);
    CHECK(ji["entries"][0]["colors"] == 2);
}

TEST_CASE("subgraph, ceiling, and trap serialization")
{
    const Graph k4 = parse_graph6("C~");
    const Json jm = to_json(max_cycle_free_subgraph(k4, 4));
    CHECK(jm["best_count"] == 4);
    CHECK(jm["witness"]["vertices"] == 4);

    const Json jp = to_json(palette_ceiling_by_peeling(k4, 4));
    CHECK(jp.contains("bound"));
    CHECK(jp.contains("exact"));

    TrapCheck empty_check;
    empty_check.kind = PatternKind::C4;
    empty_check.graph = k4;
    const Json jt = to_json(empty_check, ReportOptions{true});
    CHECK(jt["pattern"] == "C4");
    CHECK(jt["detected"].is_null());
    CHECK(jt["confirmed"] == false);
}

TEST_CASE("variable map sidecar")
{
    const Graph path(3, {{0, 1}, {1, 2}});
    const auto f = encode_feasibility(path, 3, 2);
    const Json j = variable_map_json(path, f);
    CHECK(j["num_vars"] == 4);
    CHECK(j["edge_count"] == 2);
    CHECK(j["palette"] == 2);
    REQUIRE(j["variables"].size() == 4);
    CHECK(j["variables"][0]["var"] == 1);
    CHECK(j["variables"][0]["edge"] == Json::array({0, 1}));
    CHECK(j["variables"][0]["color"] == 0);
    CHECK(j["variables"][3]["var"] == 4);
    CHECK(j["variables"][3]["edge"] == Json::array({1, 2}));
}
