// report.hpp
// JSON views of every result type, for the command-line tool and for logs.
// All serialization is deterministic: keys appear in fixed insertion order
// and containers are emitted in their canonical internal order.  Wall-clock
// fields are skipped when `deterministic` is set, so two runs over the same
// input produce byte-identical documents.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/cnf.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/interval.hpp"
#include "rainbow/maxfree.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/peeling.hpp"
#include "rainbow/saturation.hpp"
#include "rainbow/sat_search.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool deterministic = false;  // omit timing fields
};

inline Json to_json(const Edge& e) { return Json::array({e.first, e.second}); }

inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back(to_json(e));
    Json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = std::move(edges);
    j["graph6"] = to_graph6(g);
    return j;
}

inline Json to_json(const EdgeColoring& coloring)
{
    Json j;
    j["colors"] = coloring.colors;
    j["used_colors"] = coloring.used_colors();
    return j;
}

inline Json to_json(const CycleEmbedding& cycle) { return Json(cycle.vertices); }

inline Json to_json(const SearchBudget& budget)
{
    Json j;
    j["max_nodes"] = budget.max_nodes;
    j["max_seconds"] = budget.max_seconds;
    return j;
}

inline Json to_json(const FeasibilityVerdict& verdict, const ReportOptions& options = {})
{
    Json j;
    j["status"] = to_string(verdict.status);
    j["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
    j["nodes_explored"] = verdict.nodes_explored;
    if (!options.deterministic)
        j["seconds"] = verdict.seconds;
    j["budget"] = to_json(verdict.budget);
    return j;
}

inline Json to_json(const RainbowCheck& check)
{
    Json violations = Json::array();
    for (const auto& cycle : check.violations)
        violations.push_back(to_json(cycle));
    Json improper = Json::array();
    for (const auto& [e, f] : check.improper)
        improper.push_back(Json::array({to_json(e), to_json(f)}));
    Json j;
    j["proper"] = check.proper;
    j["rainbow_free"] = check.rainbow_free;
    j["rainbow_cycles"] = std::move(violations);
    j["improper_pairs"] = std::move(improper);
    return j;
}

inline Json to_json(const StructureProbes& probes)
{
    Json j;
    j["max_common_neighborhood"] = probes.max_common_neighborhood;
    j["diameter"] = probes.diameter ? Json(*probes.diameter) : Json(nullptr);
    j["degree_one_count"] = probes.degree_one_count;
    return j;
}

inline Json to_json(const PatternHit& hit)
{
    Json j;
    j["pattern"] = to_string(hit.pattern_kind);
    j["apex"] = hit.apex;
    j["embedding"] = hit.embedding;
    return j;
}

inline Json to_json(const StructuralAudit& audit)
{
    Json distant = Json::array();
    for (const auto& [u, v] : audit.distant_pairs)
        distant.push_back(Json::array({u, v}));
    Json crowded = Json::array();
    for (const auto& [u, v] : audit.crowded_pairs)
        crowded.push_back(Json::array({u, v}));
    Json j;
    j["passed"] = audit.passed();
    j["degree_one_vertices"] = audit.degree_one_vertices;
    j["distant_pairs"] = std::move(distant);
    j["crowded_pairs"] = std::move(crowded);
    return j;
}

inline Json to_json(const VertexRole& role) { return to_string(role); }

inline Json to_json(const ConstructionResult& result, const ReportOptions& = {})
{
    Json roles = Json::array();
    for (const auto& label : result.role_labels) {
        Json r;
        r["role"] = to_json(label.role);
        if (label.component >= 0)
            r["component"] = label.component;
        roles.push_back(std::move(r));
    }
    Json j;
    j["graph"] = to_json(result.graph);
    j["target_cycle"] = result.target_cycle;
    j["roles"] = std::move(roles);
    j["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
    return j;
}

inline Json to_json(const SaturationReport& report, const ReportOptions& options = {})
{
    Json non_edges = Json::array();
    for (const auto& ne : report.non_edges) {
        Json entry;
        entry["added"] = to_json(ne.added);
        entry["verdict"] = to_json(ne.verdict, options);
        entry["certificate"] = ne.certificate ? to_json(*ne.certificate) : Json(nullptr);
        non_edges.push_back(std::move(entry));
    }
    Json j;
    j["k"] = report.k;
    j["status"] = to_string(report.status());
    j["base"] = to_json(report.base, options);
    j["non_edges"] = std::move(non_edges);
    return j;
}

inline Json to_json(const SatStarResult& result, const ReportOptions& = {})
{
    Json witnesses = Json::array();
    for (const Graph& g : result.witnesses)
        witnesses.push_back(to_json(g));
    Json j;
    j["n"] = result.n;
    j["k"] = result.k;
    j["value"] = result.value ? Json(*result.value) : Json(nullptr);
    j["value_certain"] = result.value_certain;
    j["witnesses"] = std::move(witnesses);
    j["witness_list_complete"] = result.witness_list_complete;
    j["graphs_checked"] = result.graphs_checked;
    j["undecided_below"] = result.undecided_below;
    j["undecided_at_value"] = result.undecided_at_value;
    return j;
}

inline Json to_json(const ColorIntervalResult& result, const ReportOptions& options = {})
{
    Json entries = Json::array();
    for (const auto& entry : result.entries) {
        Json e;
        e["colors"] = entry.colors;
        e["verdict"] = to_json(entry.verdict, options);
        entries.push_back(std::move(e));
    }
    Json j;
    j["palette_floor"] = result.palette_floor;
    j["palette_cap"] = result.palette_cap;
    j["feasible"] = result.feasible();
    j["infeasible"] = result.infeasible();
    j["unknown"] = result.unknown();
    j["max_feasible"] = result.max_feasible() ? Json(*result.max_feasible()) : Json(nullptr);
    j["entries"] = std::move(entries);
    return j;
}

inline Json to_json(const MaxFreeResult& result, const ReportOptions& = {})
{
    Json j;
    j["best_count"] = result.best_count;
    j["witness"] = to_json(result.witness);
    j["nodes"] = result.nodes;
    return j;
}

inline Json to_json(const PaletteCeiling& ceiling, const ReportOptions& = {})
{
    Json j;
    j["bound"] = ceiling.bound;
    j["exact"] = ceiling.exact;
    j["nodes"] = ceiling.nodes;
    return j;
}

inline Json to_json(const TrapCheck& check, const ReportOptions& options = {})
{
    Json removals = Json::array();
    for (const auto& [edge, verdict] : check.single_edge_removals) {
        Json r;
        r["removed"] = to_json(edge);
        r["verdict"] = to_json(verdict, options);
        removals.push_back(std::move(r));
    }
    Json j;
    j["pattern"] = to_string(check.kind);
    j["graph"] = to_json(check.graph);
    j["detected"] = check.detected ? to_json(*check.detected) : Json(nullptr);
    j["whole"] = to_json(check.whole, options);
    j["single_edge_removals"] = std::move(removals);
    j["confirmed"] = check.confirmed();
    return j;
}

// Variable map sidecar for an exported CNF: which DIMACS variable encodes
// which (edge, color) choice.
inline Json variable_map_json(const Graph& g, const CnfFormula& formula)
{
    Json vars = Json::array();
    const auto& edges = g.edges();
    for (int e = 0; e < formula.edge_count; ++e)
        for (int c = 0; c < formula.palette; ++c) {
            Json v;
            v["var"] = formula.var(e, c);
            v["edge"] = to_json(edges[static_cast<std::size_t>(e)]);
            v["color"] = c;
            vars.push_back(std::move(v));
        }
    Json j;
    j["num_vars"] = formula.num_vars;
    j["num_clauses"] = static_cast<std::uint64_t>(formula.clauses.size());
    j["edge_count"] = formula.edge_count;
    j["palette"] = formula.palette;
    j["variables"] = std::move(vars);
    return j;
}

}  // namespace rainbow
