// saturation.hpp
// Certification of proper rainbow saturation.
//
// A graph G is rainbow-k-cycle saturated when (1) G admits a proper edge
// coloring with no rainbow k-cycle, and (2) adding any missing edge destroys
// that property: every proper coloring of G+e contains a rainbow k-cycle.
// check_rainbow_saturated decides both conditions with verified witnesses or
// exhaustive refutations, and reports UNKNOWN honestly when a budget ran out.
//
// For k = 4 there is a shortcut for condition (2): four small configurations
// inside a single neighborhood each force a rainbow 4-cycle under every
// proper coloring (see patterns.hpp), so finding one in G+e settles that
// non-edge without a search.  verify_pattern_traps re-derives exactly this rule
// on minimal fixtures, and the property tests check the shortcut against the
// exhaustive engines on every small graph.
//
// sat_star sweeps isomorphism classes of n-vertex graphs by edge count and
// returns the minimum size of a rainbow-k-cycle saturated graph, with the
// complete list of extremal witnesses.

#pragma once

#include <algorithm>
#include <bit>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/cycles.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/peeling.hpp"
#include "rainbow/sat_search.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Structural audit: cheap necessary conditions for rainbow-4-cycle saturation.
// A saturated graph has at most one vertex of degree one, no vertex pair at
// distance greater than three (disconnection counts as a violation), and no
// vertex pair with four or more common neighbors.
// ---------------------------------------------------------------------------

struct StructuralAudit {
    std::vector<int> degree_one_vertices;
    std::vector<std::pair<int, int>> distant_pairs;  // distance > 3 or unreachable
    std::vector<std::pair<int, int>> crowded_pairs;  // >= 4 common neighbors

    bool passed() const
    {
        return degree_one_vertices.size() <= 1 && distant_pairs.empty() &&
               crowded_pairs.empty();
    }
};

inline StructuralAudit audit_structural_conditions(const Graph& g)
{
    StructuralAudit audit;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            audit.degree_one_vertices.push_back(v);
    for (int u = 0; u < n; ++u) {
        const auto dist = g.bfs_distances(u);
        for (int v = u + 1; v < n; ++v) {
            const int d = dist[static_cast<std::size_t>(v)];
            if (d < 0 || d > 3)
                audit.distant_pairs.emplace_back(u, v);
            if (std::popcount(g.neighbor_mask(u) & g.neighbor_mask(v)) >= 4)
                audit.crowded_pairs.emplace_back(u, v);
        }
    }
    return audit;
}

// ---------------------------------------------------------------------------
// Saturation certification
// ---------------------------------------------------------------------------

// Palette handed to the CLAUSES engine per decided graph.  EDGE_COUNT is the
// universal bound (a proper coloring never uses more colors than edges);
// PEELING computes the sharper cycle-free-subgraph bound for each graph.
enum class PalettePolicy { EDGE_COUNT, PEELING };

struct SaturationOptions {
    DecisionEngine engine = DecisionEngine::CLAUSES;
    bool pattern_shortcut = true;  // applies to k == 4 only
    PalettePolicy palette_policy = PalettePolicy::EDGE_COUNT;
    int threads = 1;  // parallel fan-out over the non-edge decisions
};

struct NonEdgeOutcome {
    Edge added;
    FeasibilityVerdict verdict;
    // When the k=4 pattern rule settled this non-edge, the configuration that
    // certifies it; the engine was not consulted in that case.
    std::optional<PatternHit> certificate;
};

enum class SaturationStatus { SATURATED, NOT_SATURATED, UNDECIDED };

inline std::string to_string(SaturationStatus s)
{
    switch (s) {
    case SaturationStatus::SATURATED: return "SATURATED";
    case SaturationStatus::NOT_SATURATED: return "NOT_SATURATED";
    case SaturationStatus::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

struct SaturationReport {
    int k = 0;
    FeasibilityVerdict base;               // condition (1) on the graph itself
    std::vector<NonEdgeOutcome> non_edges;  // condition (2), canonical order

    SaturationStatus status() const
    {
        if (base.status == Feasibility::INFEASIBLE)
            return SaturationStatus::NOT_SATURATED;
        for (const auto& ne : non_edges)
            if (ne.verdict.status == Feasibility::FEASIBLE)
                return SaturationStatus::NOT_SATURATED;
        if (base.status == Feasibility::UNKNOWN)
            return SaturationStatus::UNDECIDED;
        for (const auto& ne : non_edges)
            if (ne.verdict.status == Feasibility::UNKNOWN)
                return SaturationStatus::UNDECIDED;
        return SaturationStatus::SATURATED;
    }

    std::vector<Edge> unknown_non_edges() const
    {
        std::vector<Edge> out;
        for (const auto& ne : non_edges)
            if (ne.verdict.status == Feasibility::UNKNOWN)
                out.push_back(ne.added);
        return out;
    }
};

namespace detail {

inline FeasibilityVerdict decide_rainbow_free(const Graph& g, int k, const SearchBudget& budget,
                                              const SaturationOptions& options)
{
    if (options.engine == DecisionEngine::BACKTRACKING)
        return find_rainbow_free_coloring(g, k, budget);
    int palette = g.edge_count();
    if (options.palette_policy == PalettePolicy::PEELING)
        palette = std::min(palette, palette_ceiling_by_peeling(g, k).bound);
    return sat_rainbow_free(g, k, palette, budget);
}

// First forbidden configuration anywhere in the graph, scanning apexes in
// ascending order.
inline std::optional<PatternHit> pattern_certificate(const Graph& g)
{
    for (int apex = 0; apex < g.vertex_count(); ++apex) {
        auto hits = detect_forbidden_patterns(g, apex);
        if (!hits.empty())
            return hits.front();
    }
    return std::nullopt;
}

}  // namespace detail

inline SaturationReport check_rainbow_saturated(const Graph& g, int k,
                                                const SearchBudget& per_run_budget = {},
                                                const SaturationOptions& options = {})
{
    SaturationReport report;
    report.k = k;
    report.base = detail::decide_rainbow_free(g, k, per_run_budget, options);

    std::vector<Edge> missing;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                missing.push_back({u, v});

    auto decide_addition = [&](const Edge& e) {
        NonEdgeOutcome out;
        out.added = e;
        const Graph augmented = g.with_edge(e.first, e.second);
        if (k == 4 && options.pattern_shortcut)
            if (auto hit = detail::pattern_certificate(augmented)) {
                out.certificate = std::move(hit);
                out.verdict.status = Feasibility::INFEASIBLE;
                out.verdict.budget = per_run_budget;
                return out;
            }
        out.verdict = detail::decide_rainbow_free(augmented, k, per_run_budget, options);
        return out;
    };

    report.non_edges.resize(missing.size());
    if (options.threads <= 1) {
        for (std::size_t i = 0; i < missing.size(); ++i)
            report.non_edges[i] = decide_addition(missing[i]);
    } else {
        std::size_t next = 0;
        while (next < missing.size()) {
            const std::size_t batch =
                std::min<std::size_t>(static_cast<std::size_t>(options.threads),
                                      missing.size() - next);
            std::vector<std::future<NonEdgeOutcome>> futures;
            futures.reserve(batch);
            for (std::size_t i = 0; i < batch; ++i)
                futures.push_back(
                    std::async(std::launch::async, decide_addition, missing[next + i]));
            for (std::size_t i = 0; i < batch; ++i)
                report.non_edges[next + i] = futures[i].get();
            next += batch;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Minimum saturated size over all n-vertex graphs
// ---------------------------------------------------------------------------

struct SatStarResult {
    int n = 0;
    int k = 0;
    std::optional<int> value;       // minimum edges of a saturated graph, if one was found
    bool value_certain = true;      // false if an undecided graph below `value` remains
    std::vector<Graph> witnesses;   // canonical representatives at the optimum
    bool witness_list_complete = true;  // false if a graph at `value` stayed undecided
    std::uint64_t graphs_checked = 0;
    std::uint64_t undecided_below = 0;
    std::uint64_t undecided_at_value = 0;
};

inline SatStarResult sat_star(int n, int k, const SearchBudget& per_run_budget = {},
                              const SaturationOptions& options = {})
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("sat_star: exhaustive sweep supports 1 <= n <= 8");
    SatStarResult result;
    result.n = n;
    result.k = k;

    std::uint64_t undecided_so_far = 0;
    const int max_edges = n * (n - 1) / 2;
    for (int m = 0; m <= max_edges; ++m) {
        std::vector<Graph> found;
        std::uint64_t undecided_here = 0;
        enumerate_graphs(
            n,
            [&](const Graph& g) {
                ++result.graphs_checked;
                switch (check_rainbow_saturated(g, k, per_run_budget, options).status()) {
                case SaturationStatus::SATURATED: found.push_back(g); break;
                case SaturationStatus::UNDECIDED: ++undecided_here; break;
                case SaturationStatus::NOT_SATURATED: break;
                }
            },
            m);
        if (!found.empty()) {
            result.value = m;
            result.witnesses = std::move(found);
            result.value_certain = undecided_so_far == 0;
            result.witness_list_complete = undecided_here == 0;
            result.undecided_below = undecided_so_far;
            result.undecided_at_value = undecided_here;
            return result;
        }
        undecided_so_far += undecided_here;
    }
    result.value_certain = undecided_so_far == 0;
    result.undecided_below = undecided_so_far;
    return result;
}

// ---------------------------------------------------------------------------
// The four forbidden-configuration rules, re-derived from scratch
// ---------------------------------------------------------------------------

struct TrapCheck {
    PatternKind kind;
    Graph graph;  // apex 0 joined to every vertex of the minimal configuration
    std::optional<PatternHit> detected;  // what the detector reports at apex 0
    FeasibilityVerdict whole;            // expect INFEASIBLE: the trap springs
    // Deleting any single configuration edge (the apex edges stay) must make
    // the graph colorable again — the configurations are minimal.
    std::vector<std::pair<Edge, FeasibilityVerdict>> single_edge_removals;

    bool confirmed() const
    {
        if (!detected || detected->pattern_kind != kind)
            return false;
        if (whole.status != Feasibility::INFEASIBLE)
            return false;
        for (const auto& [edge, verdict] : single_edge_removals)
            if (verdict.status != Feasibility::FEASIBLE)
                return false;
        return true;
    }
};

inline std::vector<TrapCheck> verify_pattern_traps(const SearchBudget& per_run_budget = {},
                                                 const SaturationOptions& options = {})
{
    struct Fixture {
        PatternKind kind;
        int n;
        std::vector<Edge> configuration;  // edges among the neighbors of apex 0
    };
    const std::vector<Fixture> fixtures = {
        {PatternKind::TRIANGLE_TWO_PENDANTS, 6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}}},
        {PatternKind::C4, 5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}},
        {PatternKind::LONG_CYCLE_PENDANT, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}}},
        {PatternKind::D22_SUBDIVISION, 8,
         {{1, 2}, {2, 3}, {1, 4}, {1, 5}, {3, 6}, {3, 7}}},
    };

    std::vector<TrapCheck> checks;
    for (const auto& fx : fixtures) {
        std::vector<Edge> edges;
        for (int v = 1; v < fx.n; ++v)
            edges.push_back({0, v});
        edges.insert(edges.end(), fx.configuration.begin(), fx.configuration.end());
        TrapCheck check;
        check.kind = fx.kind;
        check.graph = Graph(fx.n, edges);
        for (const auto& hit : detect_forbidden_patterns(check.graph, 0))
            if (hit.pattern_kind == fx.kind) {
                check.detected = hit;
                break;
            }
        check.whole = detail::decide_rainbow_free(check.graph, 4, per_run_budget, options);
        for (const Edge& e : fx.configuration) {
            const Graph reduced = check.graph.without_edge(e.first, e.second);
            check.single_edge_removals.emplace_back(
                e, detail::decide_rainbow_free(reduced, 4, per_run_budget, options));
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

}  // namespace rainbow
