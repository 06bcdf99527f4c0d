// sat_search.hpp
// Clause-learning back end for the rainbow-free coloring decision problem.
//
// The direct backtracking engine in search.hpp explores colorings; this back
// end instead compiles the constraints to CNF and runs the bundled CDCL
// solver.  The encoding uses one boolean per (edge, color) pair plus Tseitin
// variables that witness "these two cycle edges share a color":
//
//   - every edge takes at least one and at most one palette color,
//   - incident edges never share a color (properness),
//   - for every k-cycle, some non-incident pair of its edges shares a color
//     (s_{ef} -> exists c with both edges colored c), so no cycle is rainbow,
//   - optionally, every palette color is used somewhere (exact color count).
//
// Symmetry breaking exploits that colors are interchangeable: the star of a
// maximum-degree vertex is pinned to colors 0..d-1 (any proper coloring can
// be renamed into this form), and the remaining colors are ordered by first
// use along the non-star edges.  Both steps preserve satisfiability and the
// number of colors used, so verdicts are exact.

#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/sat_solver.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

struct CompiledConstraints {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    int edge_count = 0;
    int palette = 0;

    // 1-based DIMACS variable for "edge e (canonical index) has color c".
    int var(int e, int c) const { return e * palette + c + 1; }
};

struct SatSearchOptions {
    bool exact_colors = false;   // require every palette color to be used
    bool symmetry_breaking = true;
};

inline CompiledConstraints compile_rainbow_constraints(const Graph& g, int k, int palette,
                                                       const SatSearchOptions& options = {})
{
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (palette < 1 && m > 0)
        throw std::invalid_argument("compile_rainbow_constraints: palette must be positive");

    CompiledConstraints f;
    f.edge_count = m;
    f.palette = palette;
    f.num_vars = m * palette;
    if (m == 0)
        return f;

    // Each edge takes at least one color...
    for (int e = 0; e < m; ++e) {
        std::vector<int> clause;
        clause.reserve(static_cast<std::size_t>(palette));
        for (int c = 0; c < palette; ++c)
            clause.push_back(f.var(e, c));
        f.clauses.push_back(std::move(clause));
    }
    // ...and at most one (the cycle constraints below read off the chosen
    // color through the shared-pair variables, so multiple true colors per
    // edge would let spurious "sharing" slip through).
    for (int e = 0; e < m; ++e)
        for (int c1 = 0; c1 < palette; ++c1)
            for (int c2 = c1 + 1; c2 < palette; ++c2)
                f.clauses.push_back({-f.var(e, c1), -f.var(e, c2)});

    // Properness: incident edges take distinct colors.
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            const auto [a, b] = edges[static_cast<std::size_t>(e1)];
            const auto [x, y] = edges[static_cast<std::size_t>(e2)];
            if (a == x || a == y || b == x || b == y)
                for (int c = 0; c < palette; ++c)
                    f.clauses.push_back({-f.var(e1, c), -f.var(e2, c)});
        }

    // Rainbow prevention, one clause per k-cycle over shared-pair witnesses.
    // Incident pairs are omitted: properness already forbids them sharing,
    // so a repeat inside a cycle must come from a non-incident pair.
    std::map<std::pair<int, int>, int> pair_var;  // (e1,e2) -> s variable
    const auto cycles = enumerate_cycles(g, k);
    for (const auto& cycle : cycles) {
        std::vector<int> indices;
        for (const Edge& e : cycle.edges())
            indices.push_back(g.edge_index(e.first, e.second));
        std::vector<int> cycle_clause;
        for (std::size_t i = 0; i < indices.size(); ++i)
            for (std::size_t j = i + 1; j < indices.size(); ++j) {
                const int e1 = std::min(indices[i], indices[j]);
                const int e2 = std::max(indices[i], indices[j]);
                const auto [a, b] = edges[static_cast<std::size_t>(e1)];
                const auto [x, y] = edges[static_cast<std::size_t>(e2)];
                if (a == x || a == y || b == x || b == y)
                    continue;
                auto it = pair_var.find({e1, e2});
                if (it == pair_var.end()) {
                    // Allocate s and its per-color witnesses contiguously.
                    const int s = f.num_vars + 1;
                    f.num_vars += 1 + palette;
                    it = pair_var.emplace(std::pair<int, int>{e1, e2}, s).first;
                    std::vector<int> any_color{-s};
                    for (int c = 0; c < palette; ++c) {
                        const int sc = s + 1 + c;
                        f.clauses.push_back({-sc, f.var(e1, c)});
                        f.clauses.push_back({-sc, f.var(e2, c)});
                        any_color.push_back(sc);
                    }
                    f.clauses.push_back(std::move(any_color));
                }
                cycle_clause.push_back(it->second);
            }
        std::sort(cycle_clause.begin(), cycle_clause.end());
        cycle_clause.erase(std::unique(cycle_clause.begin(), cycle_clause.end()),
                           cycle_clause.end());
        f.clauses.push_back(std::move(cycle_clause));
    }

    if (options.symmetry_breaking) {
        // Pin the star of a maximum-degree vertex to colors 0..d-1.
        int anchor = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(anchor))
                anchor = v;
        std::vector<int> star;
        for (int e = 0; e < m; ++e)
            if (edges[static_cast<std::size_t>(e)].first == anchor ||
                edges[static_cast<std::size_t>(e)].second == anchor)
                star.push_back(e);
        const int d = static_cast<int>(star.size());
        if (d > palette)
            throw std::logic_error("compile_rainbow_constraints: palette below max degree");
        std::vector<char> is_star(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < d; ++i) {
            f.clauses.push_back({f.var(star[static_cast<std::size_t>(i)], i)});
            is_star[static_cast<std::size_t>(star[static_cast<std::size_t>(i)])] = 1;
        }
        // Order the remaining colors by first use along the non-star edges:
        // color c >= d+1 on edge pi_j needs color c-1 on some earlier pi_i.
        std::vector<int> pi;
        for (int e = 0; e < m; ++e)
            if (!is_star[static_cast<std::size_t>(e)])
                pi.push_back(e);
        for (std::size_t j = 0; j < pi.size(); ++j)
            for (int c = d + 1; c < palette; ++c) {
                std::vector<int> clause{-f.var(pi[j], c)};
                for (std::size_t i = 0; i < j; ++i)
                    clause.push_back(f.var(pi[i], c - 1));
                f.clauses.push_back(std::move(clause));
            }
    }

    if (options.exact_colors)
        for (int c = 0; c < palette; ++c) {
            std::vector<int> clause;
            clause.reserve(static_cast<std::size_t>(m));
            for (int e = 0; e < m; ++e)
                clause.push_back(f.var(e, c));
            f.clauses.push_back(std::move(clause));
        }

    return f;
}

namespace detail {

inline FeasibilityVerdict run_compiled(const Graph& g, int k, const CompiledConstraints& f,
                                        bool exact_colors, const SearchBudget& budget)
{
    sat::SolverBudget sb;
    sb.max_conflicts = budget.max_nodes;
    sb.max_seconds = budget.max_seconds;

    const auto started = std::chrono::steady_clock::now();
    const auto outcome = sat::solve_clauses(f.num_vars, f.clauses, sb);

    FeasibilityVerdict verdict;
    verdict.nodes_explored = outcome.stats.conflicts;
    verdict.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    verdict.budget = budget;
    switch (outcome.status) {
        case sat::SolveStatus::UNKNOWN:
            verdict.status = Feasibility::UNKNOWN;
            return verdict;
        case sat::SolveStatus::UNSAT:
            verdict.status = Feasibility::INFEASIBLE;
            return verdict;
        case sat::SolveStatus::SAT:
            break;
    }

    EdgeColoring coloring;
    coloring.colors.assign(static_cast<std::size_t>(f.edge_count), -1);
    for (int e = 0; e < f.edge_count; ++e)
        for (int c = 0; c < f.palette; ++c)
            if (outcome.model[static_cast<std::size_t>(f.var(e, c)) - 1] > 0) {
                if (coloring.colors[static_cast<std::size_t>(e)] != -1)
                    throw std::logic_error("run_compiled: edge assigned two colors");
                coloring.colors[static_cast<std::size_t>(e)] = c;
            }
    for (int c : coloring.colors)
        if (c == -1)
            throw std::logic_error("run_compiled: uncolored edge in model");
    if (!verifies(g, coloring, k))
        throw std::logic_error("run_compiled: model decodes to an invalid coloring");
    if (exact_colors && coloring.used_colors() != f.palette)
        throw std::logic_error("run_compiled: model misses a required color");
    verdict.status = Feasibility::FEASIBLE;
    verdict.witness = std::move(coloring);
    return verdict;
}

}  // namespace detail

// Decides whether g admits a proper edge coloring with no rainbow k-cycle,
// searching within the given palette.  Sound whenever palette is a valid
// upper bound on the colors such a coloring can use (|E| always is; the
// peeling bound is a sharper choice).
inline FeasibilityVerdict sat_rainbow_free(const Graph& g, int k, int palette,
                                           const SearchBudget& budget = {},
                                           const SatSearchOptions& options = {})
{
    if (g.edge_count() == 0) {
        FeasibilityVerdict verdict;
        verdict.status = Feasibility::FEASIBLE;
        verdict.witness = EdgeColoring{};
        verdict.budget = budget;
        return verdict;
    }
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    if (palette < max_degree)
        throw std::invalid_argument("sat_rainbow_free: palette below max degree is never a "
                                    "sound color bound");
    SatSearchOptions opts = options;
    opts.exact_colors = false;
    const auto f = compile_rainbow_constraints(g, k, palette, opts);
    return detail::run_compiled(g, k, f, false, budget);
}

// Decides whether g admits a proper rainbow-k-cycle-free coloring using
// exactly `colors` distinct colors.
inline FeasibilityVerdict sat_exactly_colors(const Graph& g, int k, int colors,
                                             const SearchBudget& budget = {},
                                             const SatSearchOptions& options = {})
{
    const int m = g.edge_count();
    FeasibilityVerdict trivial;
    trivial.budget = budget;
    if (m == 0) {
        trivial.status = colors == 0 ? Feasibility::FEASIBLE : Feasibility::INFEASIBLE;
        if (trivial.status == Feasibility::FEASIBLE)
            trivial.witness = EdgeColoring{};
        return trivial;
    }
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    if (colors < max_degree || colors > m) {
        trivial.status = Feasibility::INFEASIBLE;
        return trivial;
    }
    SatSearchOptions opts = options;
    opts.exact_colors = true;
    const auto f = compile_rainbow_constraints(g, k, colors, opts);
    return detail::run_compiled(g, k, f, true, budget);
}

}  // namespace rainbow
