// interval.hpp
// For each candidate color count c, decide whether the graph has a proper
// rainbow-k-cycle-free coloring using exactly c colors.  The floor of the
// sweep is the maximum degree (properness alone needs that many); the cap is
// supplied by the caller, typically an edge count or a peeling bound.
//
// Every c is decided independently and honestly: a witness coloring, a
// refutation, or UNKNOWN when the per-color budget ran out.  Nothing assumes
// the feasible set is contiguous — the result reports exactly what was
// established.

#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/sat_search.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

struct ColorIntervalEntry {
    int colors = 0;
    FeasibilityVerdict verdict;
};

struct ColorIntervalResult {
    int palette_floor = 0;  // maximum degree: no proper coloring uses fewer
    int palette_cap = 0;    // inclusive upper end of the sweep
    std::vector<ColorIntervalEntry> entries;  // one per c in [floor, cap]

    std::vector<int> with_status(Feasibility s) const
    {
        std::vector<int> out;
        for (const auto& e : entries)
            if (e.verdict.status == s)
                out.push_back(e.colors);
        return out;
    }
    std::vector<int> feasible() const { return with_status(Feasibility::FEASIBLE); }
    std::vector<int> infeasible() const { return with_status(Feasibility::INFEASIBLE); }
    std::vector<int> unknown() const { return with_status(Feasibility::UNKNOWN); }

    std::optional<int> max_feasible() const
    {
        const auto f = feasible();
        if (f.empty())
            return std::nullopt;
        return *std::max_element(f.begin(), f.end());
    }
};

inline ColorIntervalResult color_interval(const Graph& g, int k, int c_max,
                                          const SearchBudget& per_color_budget = {},
                                          DecisionEngine engine = DecisionEngine::CLAUSES,
                                          int threads = 1)
{
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    if (c_max < max_degree)
        throw std::invalid_argument("color_interval: cap below the maximum degree");

    ColorIntervalResult result;
    result.palette_floor = max_degree;
    result.palette_cap = c_max;

    auto decide = [&](int c) {
        return engine == DecisionEngine::CLAUSES
                   ? sat_exactly_colors(g, k, c, per_color_budget)
                   : find_coloring_with_exactly(g, k, c, per_color_budget);
    };

    const int count = c_max - max_degree + 1;
    result.entries.resize(static_cast<std::size_t>(count));
    if (threads <= 1) {
        for (int i = 0; i < count; ++i)
            result.entries[static_cast<std::size_t>(i)] =
                ColorIntervalEntry{max_degree + i, decide(max_degree + i)};
    } else {
        std::vector<std::future<FeasibilityVerdict>> futures;
        futures.reserve(static_cast<std::size_t>(count));
        int launched = 0;
        while (launched < count) {
            const int batch = std::min(threads, count - launched);
            for (int i = 0; i < batch; ++i)
                futures.push_back(std::async(std::launch::async, decide, max_degree + launched + i));
            for (int i = 0; i < batch; ++i) {
                const int c = max_degree + launched + i;
                result.entries[static_cast<std::size_t>(c - max_degree)] =
                    ColorIntervalEntry{c, futures[static_cast<std::size_t>(launched + i)].get()};
            }
            launched += batch;
        }
    }
    return result;
}

}  // namespace rainbow
