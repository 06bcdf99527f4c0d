// search.hpp
// Exhaustive backtracking search for proper edge-colorings without a rainbow
// k-cycle.  Complete at palette size |E| (a proper coloring never needs more
// colors than edges, and color names are immaterial), with introduce-in-order
// symmetry breaking along a fixed edge order: an edge may use at most one
// color index beyond the largest index already in use, so each coloring is
// visited once per color-renaming class.  Budgets make UNKNOWN a first-class
// verdict: INFEASIBLE is reported only when the search space was exhausted.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class Feasibility { FEASIBLE, INFEASIBLE, UNKNOWN };

inline std::string to_string(Feasibility f)
{
    switch (f) {
    case Feasibility::FEASIBLE: return "FEASIBLE";
    case Feasibility::INFEASIBLE: return "INFEASIBLE";
    case Feasibility::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

// The two interchangeable decision back ends: CLAUSES compiles the instance
// to CNF for the clause-learning solver, BACKTRACKING colors edges directly.
enum class DecisionEngine { CLAUSES, BACKTRACKING };

inline std::string to_string(DecisionEngine e)
{
    return e == DecisionEngine::CLAUSES ? "clauses" : "backtracking";
}

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000;
    double max_seconds = 600.0;
};

struct FeasibilityVerdict {
    Feasibility status = Feasibility::UNKNOWN;
    std::optional<EdgeColoring> witness;  // present (and verified) iff FEASIBLE
    std::uint64_t nodes_explored = 0;
    double seconds = 0.0;
    SearchBudget budget;  // the caps that applied to this run
};

namespace detail {

// One backtracking run over proper colorings of g with `palette` colors.
// When `require_all_colors` is set, only colorings using every color count
// (the exact-c membership question); otherwise palette-size feasibility.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, int palette, bool require_all_colors)
        : g_(g), k_(k), palette_(palette), require_all_(require_all_colors)
    {
        const auto cycles = enumerate_cycles(g, k);
        const int m = g.edge_count();
        cycle_edges_.reserve(cycles.size());
        cycles_of_edge_.assign(static_cast<std::size_t>(m), {});
        for (const auto& cyc : cycles) {
            std::vector<int> eids;
            for (auto [u, v] : cyc.edges())
                eids.push_back(g.edge_index(u, v));
            for (int e : eids)
                cycles_of_edge_[static_cast<std::size_t>(e)].push_back(
                    static_cast<int>(cycle_edges_.size()));
            cycle_edges_.push_back(std::move(eids));
        }

        // Fail-first: edges on many k-cycles are the most constrained, so they
        // are assigned earliest; ties fall back to the canonical edge order.
        order_.resize(static_cast<std::size_t>(m));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return cycles_of_edge_[static_cast<std::size_t>(a)].size() >
                   cycles_of_edge_[static_cast<std::size_t>(b)].size();
        });

        color_.assign(static_cast<std::size_t>(m), -1);
        vertex_uses_.assign(static_cast<std::size_t>(g.vertex_count()) *
                                static_cast<std::size_t>(std::max(palette, 1)),
                            0);
        colored_in_cycle_.assign(cycle_edges_.size(), 0);
        repeats_in_cycle_.assign(cycle_edges_.size(), 0);
    }

    FeasibilityVerdict run(const SearchBudget& budget)
    {
        budget_ = budget;
        nodes_ = 0;
        aborted_ = false;
        start_ = std::chrono::steady_clock::now();
        const Outcome result = dfs(0, -1);
        FeasibilityVerdict verdict;
        verdict.budget = budget;
        verdict.nodes_explored = nodes_;
        verdict.seconds = elapsed();
        switch (result) {
        case Outcome::FOUND: {
            verdict.status = Feasibility::FEASIBLE;
            EdgeColoring witness{color_};
            if (!verifies(g_, witness, k_) || (require_all_ && witness.used_colors() != palette_))
                throw std::logic_error("search produced a witness that fails verification");
            verdict.witness = std::move(witness);
            break;
        }
        case Outcome::EXHAUSTED:
            verdict.status = Feasibility::INFEASIBLE;
            break;
        case Outcome::ABORTED:
            verdict.status = Feasibility::UNKNOWN;
            break;
        }
        return verdict;
    }

private:
    enum class Outcome { FOUND, EXHAUSTED, ABORTED };

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool over_budget()
    {
        if (nodes_ > budget_.max_nodes)
            return true;
        if ((nodes_ & 0xFFF) == 0 && elapsed() > budget_.max_seconds)
            return true;
        return false;
    }

    // Would assigning color x to edge e complete some k-cycle all of whose
    // other edges already carry pairwise distinct colors, none equal to x?
    bool completes_rainbow(int e, int x) const
    {
        for (int ci : cycles_of_edge_[static_cast<std::size_t>(e)]) {
            if (colored_in_cycle_[static_cast<std::size_t>(ci)] != k_ - 1 ||
                repeats_in_cycle_[static_cast<std::size_t>(ci)] != 0)
                continue;
            bool repeated = false;
            for (int f : cycle_edges_[static_cast<std::size_t>(ci)])
                if (color_[static_cast<std::size_t>(f)] == x) {
                    repeated = true;
                    break;
                }
            if (!repeated)
                return true;
        }
        return false;
    }

    void commit(int e, int x)
    {
        for (int ci : cycles_of_edge_[static_cast<std::size_t>(e)]) {
            int dup = 0;
            for (int f : cycle_edges_[static_cast<std::size_t>(ci)])
                if (color_[static_cast<std::size_t>(f)] == x)
                    ++dup;
            repeats_in_cycle_[static_cast<std::size_t>(ci)] += dup;
            ++colored_in_cycle_[static_cast<std::size_t>(ci)];
        }
        color_[static_cast<std::size_t>(e)] = x;
        auto [u, v] = g_.edges()[static_cast<std::size_t>(e)];
        vertex_uses_[slot(u, x)] = 1;
        vertex_uses_[slot(v, x)] = 1;
    }

    void retract(int e, int x)
    {
        color_[static_cast<std::size_t>(e)] = -1;
        for (int ci : cycles_of_edge_[static_cast<std::size_t>(e)]) {
            int dup = 0;
            for (int f : cycle_edges_[static_cast<std::size_t>(ci)])
                if (color_[static_cast<std::size_t>(f)] == x)
                    ++dup;
            repeats_in_cycle_[static_cast<std::size_t>(ci)] -= dup;
            --colored_in_cycle_[static_cast<std::size_t>(ci)];
        }
        auto [u, v] = g_.edges()[static_cast<std::size_t>(e)];
        vertex_uses_[slot(u, x)] = 0;
        vertex_uses_[slot(v, x)] = 0;
    }

    std::size_t slot(int vertex, int color) const
    {
        return static_cast<std::size_t>(vertex) * static_cast<std::size_t>(palette_) +
               static_cast<std::size_t>(color);
    }

    Outcome dfs(int pos, int max_used)
    {
        const int m = g_.edge_count();
        if (require_all_ && palette_ - 1 - max_used > m - pos)
            return Outcome::EXHAUSTED;  // not enough edges left to introduce the rest
        if (pos == m)
            return !require_all_ || max_used + 1 == palette_ ? Outcome::FOUND
                                                             : Outcome::EXHAUSTED;
        const int e = order_[static_cast<std::size_t>(pos)];
        auto [u, v] = g_.edges()[static_cast<std::size_t>(e)];
        const int limit = std::min(max_used + 1, palette_ - 1);
        for (int x = 0; x <= limit; ++x) {
            ++nodes_;
            if (over_budget()) {
                aborted_ = true;
                return Outcome::ABORTED;
            }
            if (vertex_uses_[slot(u, x)] || vertex_uses_[slot(v, x)])
                continue;  // an incident edge already has this color
            if (completes_rainbow(e, x))
                continue;
            commit(e, x);
            const Outcome sub = dfs(pos + 1, std::max(max_used, x));
            if (sub != Outcome::EXHAUSTED)
                return sub;  // found or aborted: leave the assignment in place
            retract(e, x);
        }
        return Outcome::EXHAUSTED;
    }

    const Graph& g_;
    int k_;
    int palette_;
    bool require_all_;
    std::vector<std::vector<int>> cycle_edges_;    // cycle id -> edge indices
    std::vector<std::vector<int>> cycles_of_edge_; // edge index -> cycle ids
    std::vector<int> order_;                       // assignment order
    std::vector<int> color_;                       // current partial coloring
    std::vector<std::uint8_t> vertex_uses_;        // vertex x color -> in use
    std::vector<int> colored_in_cycle_;
    std::vector<int> repeats_in_cycle_;            // same-color pairs so far
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Does g admit a proper edge-coloring with no rainbow C_k?  Palette |E(g)|,
// which is sufficient without loss of generality.
inline FeasibilityVerdict find_rainbow_free_coloring(const Graph& g, int k,
                                                     const SearchBudget& budget = {})
{
    detail::ColoringSearch search(g, k, g.edge_count(), false);
    return search.run(budget);
}

// Does g admit a proper edge-coloring with exactly `colors` colors (all used)
// and no rainbow C_k?  The membership question behind the feasible set K.
inline FeasibilityVerdict find_coloring_with_exactly(const Graph& g, int k, int colors,
                                                     const SearchBudget& budget = {})
{
    if (colors < 0)
        throw std::invalid_argument("find_coloring_with_exactly: negative color count");
    detail::ColoringSearch search(g, k, colors, true);
    return search.run(budget);
}

}  // namespace rainbow
